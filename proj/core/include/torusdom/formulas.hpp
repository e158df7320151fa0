#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusdom/validate.hpp"

namespace torusdom {

/// ceil(4n/5), the total domination number of G_{n,3}.
int gamma_t_m3(int n);
/// ceil(4n/5), plus one when n = 1 or 3 (mod 5).
int gamma_p_m3(int n);
/// Shared total and paired domination number of G_{n,4}:
/// n, n+1, n+2, n+1 for n = 0, 1, 2, 3 (mod 4).
int gamma_tp_m4(int n);

/// ceil(nm/4): a 4-regular graph of order nm needs that many vertices to
/// totally dominate it, with equality exactly for efficient sets.
int lower_bound_regular(int n, int m);

/// Exact value when a closed form covers the instance (m or n in {3, 4}, or
/// both divisible by 4). Total and Paired only; Plain is never covered.
std::optional<int> known_value(int n, int m, DominationKind kind);

struct Bound {
  int value = 0;
  std::string provenance;

  friend bool operator==(const Bound&, const Bound&) = default;
};

struct BoundReport {
  DominationKind kind = DominationKind::Total;
  std::optional<int> exact;
  /// Ascending by value; ties keep catalogue order.
  std::vector<Bound> upper_bounds;
  int lower_bound = 0;
  std::string lower_provenance;

  int best_upper() const;
};

/// Every upper bound in the catalogue that applies to (n, m, kind), for both
/// orientations of the torus. Plain reuses the Total bounds and gets the
/// closed-neighbourhood lower bound ceil(nm/5).
BoundReport upper_bounds(int n, int m, DominationKind kind);

}  // namespace torusdom
