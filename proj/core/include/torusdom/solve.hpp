#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "torusdom/torus.hpp"
#include "torusdom/validate.hpp"

namespace torusdom {

enum class SolveMethod { Oracle, ProfileDP, PairedSearch };
const char* to_string(SolveMethod method);

inline constexpr int kOracleMaxOrder = 24;
inline constexpr int kProfileMaxHeight = 8;
inline constexpr int kPairedProfileMaxHeight = 6;
inline constexpr int kEfficientMaxHeight = 12;

struct SolveOptions {
  /// Threads for seed evaluation; 0 means std::thread::hardware_concurrency.
  int workers = 0;
  /// Return the lexicographically least optimum (slot order) instead of the
  /// first one the search meets.
  bool canonical = false;
  /// Node cap for the paired branch and bound.
  std::int64_t node_budget = 20'000'000;
};

/// Exact optimum. `certificate` validates under `kind` with |certificate| ==
/// value, and the search that produced it was exhaustive.
struct SolveResult {
  int value = 0;
  VertexSet certificate;
  DominationKind kind = DominationKind::Total;
  SolveMethod method = SolveMethod::Oracle;
  std::chrono::nanoseconds elapsed{0};
};

/// Subset enumeration in increasing size; n*m <= 24. The certificate is the
/// lexicographically least optimum. Kinds Plain, Total, Paired.
SolveResult solve_oracle(int n, int m, DominationKind kind, const SolveOptions& options = {});

/// Cyclic column profile DP for Plain or Total; min(n, m) <= 8.
SolveResult solve_profile_dp(int n, int m, DominationKind kind, const SolveOptions& options = {});

/// Paired domination number: profile DP with pending-partner masks when
/// min(n, m) <= 6, otherwise branch and bound over disjoint adjacent pairs.
SolveResult solve_paired(int n, int m, const SolveOptions& options = {});

/// Oracle when n*m <= 20, otherwise the DP or paired path.
SolveResult solve(int n, int m, DominationKind kind, const SolveOptions& options = {});

/// A set with |N(v) n D| = 1 for every vertex, if one exists. Needs
/// min(n, m) <= 12.
std::optional<VertexSet> find_efficient_tds(int n, int m);

}  // namespace torusdom
