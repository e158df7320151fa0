#include "torusdom/formulas.hpp"

#include <algorithm>
#include <limits>

#include "torusdom/error.hpp"

namespace torusdom {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_at_least_3(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidDimensions, "cycle length must be >= 3, got " + std::to_string(n));
}

}  // namespace

int gamma_t_m3(int n) {
  require_at_least_3(n);
  return ceil_div(4 * n, 5);
}

int gamma_p_m3(int n) {
  require_at_least_3(n);
  int base = ceil_div(4 * n, 5);
  return (n % 5 == 1 || n % 5 == 3) ? base + 1 : base;
}

int gamma_tp_m4(int n) {
  require_at_least_3(n);
  switch (n % 4) {
    case 0: return n;
    case 2: return n + 2;
    default: return n + 1;
  }
}

int lower_bound_regular(int n, int m) { return ceil_div(n * m, 4); }

std::optional<int> known_value(int n, int m, DominationKind kind) {
  check_dims({n, m});
  if (kind != DominationKind::Total && kind != DominationKind::Paired) return std::nullopt;
  const bool paired = kind == DominationKind::Paired;
  if (n < m) std::swap(n, m);
  if (m == 3) return paired ? gamma_p_m3(n) : gamma_t_m3(n);
  if (m == 4) return gamma_tp_m4(n);
  if (n % 4 == 0 && m % 4 == 0) return n * m / 4;
  return std::nullopt;
}

int BoundReport::best_upper() const {
  return upper_bounds.empty() ? std::numeric_limits<int>::max() : upper_bounds.front().value;
}

namespace {

// Bounds for one orientation: m counts rungs, n counts rings, both >= 5.
void large_bounds(int n, int m, bool paired, std::vector<Bound>& out) {
  if (n < 5 || m < 5) return;
  const int a = m % 4;
  const int b = n % 4;
  auto label = [&](const std::string& family) {
    return family + " on G(" + std::to_string(n) + "," + std::to_string(m) + ")";
  };
  if (a == 0 && b == 1) {
    out.push_back({(n + 1) * m / 4, label("De+column (n=1,m=0 mod 4): (n+1)m/4")});
  }
  if (a == 1 && b == 1) {
    out.push_back(paired ? Bound{(n + 1) * (m + 1) / 4 + 1, label("De+corner (n,m=1 mod 4): (n+1)(m+1)/4+1")}
                         : Bound{(n + 1) * (m + 1) / 4, label("De+corner (n,m=1 mod 4): (n+1)(m+1)/4")});
  }
  if (a == 1 && b == 3) {
    out.push_back(paired ? Bound{(n + 1) * (m + 1) / 4 - 2, label("De-trim (n=3,m=1 mod 4): (n+1)(m+1)/4-2")}
                         : Bound{(n + 1) * (m + 1) / 4 - 3, label("De-trim (n=3,m=1 mod 4): (n+1)(m+1)/4-3")});
  }
  if (a == 1 && b == 2) {
    out.push_back(paired ? Bound{(n + 2) * (m + 1) / 4 - 2,
                                 label("De-trim projected (n=2,m=1 mod 4): (n+2)(m+1)/4-2")}
                         : Bound{(n + 2) * (m + 1) / 4 - 3,
                                 label("De-trim projected (n=2,m=1 mod 4): (n+2)(m+1)/4-3")});
  }
  if (a == 2 && b == 2) {
    out.push_back({(n + 2) * (m + 2) / 4 - 6, label("De+frame (n,m=2 mod 4): (n+2)(m+2)/4-6")});
  }
}

}  // namespace

BoundReport upper_bounds(int n, int m, DominationKind kind) {
  check_dims({n, m});
  BoundReport report;
  report.kind = kind;
  const bool paired = kind == DominationKind::Paired;

  if (kind == DominationKind::Plain) {
    report.lower_bound = ceil_div(n * m, 5);
    report.lower_provenance = "closed-neighbourhood counting bound ceil(nm/5)";
  } else {
    report.lower_bound = lower_bound_regular(n, m);
    report.lower_provenance = "4-regular counting bound ceil(nm/4)";
  }
  if (kind == DominationKind::EfficientTotal) {
    if ((n * m) % 4 == 0) report.exact = n * m / 4;
    return report;
  }
  if (kind != DominationKind::Plain) report.exact = known_value(n, m, kind);

  std::vector<Bound> bounds;
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  if (lo == 3) {
    bounds.push_back(paired ? Bound{gamma_p_m3(hi), "m3-period5 closed form"}
                            : Bound{gamma_t_m3(hi), "m3-period5 closed form"});
  } else if (lo == 4) {
    bounds.push_back({gamma_tp_m4(hi), "m4-blocks closed form"});
  }
  if (n % 4 == 0 && m % 4 == 0) bounds.push_back({n * m / 4, "mod4-blocks nm/4"});
  bounds.push_back({4 * ceil_div(n, 4) * ceil_div(m, 4), "rounded-up-blocks 4*ceil(n/4)*ceil(m/4)"});
  large_bounds(n, m, paired, bounds);
  if (n != m) large_bounds(m, n, paired, bounds);

  std::stable_sort(bounds.begin(), bounds.end(), [](const Bound& x, const Bound& y) { return x.value < y.value; });
  report.upper_bounds = std::move(bounds);
  return report;
}

}  // namespace torusdom
