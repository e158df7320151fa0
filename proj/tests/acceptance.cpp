// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "block_excision.hpp"
#include "support.hpp"
#include "torusdom/constructions.hpp"
#include "torusdom/formulas.hpp"
#include "torusdom/solve.hpp"
#include "torusdom/validate.hpp"

using namespace torusdom;

namespace {

// Wall-clock budgets in seconds. Values are exact integers, so every value
// comparison below is exact.
constexpr double kThreeRungBudget = 120.0;
constexpr double kFourRungBudget = 300.0;
constexpr double kBoundAuditBudget = 600.0;
constexpr int kProjectionTrials = 100;
constexpr int kSweepLimit = 21;
constexpr int kBlockExcisionMaxSize = 9;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Suite {
 public:
  void run(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), seconds);
    std::fflush(stdout);
    all_pass_ = all_pass_ && o.pass;
  }
  bool all_pass() const { return all_pass_; }

 private:
  bool all_pass_ = true;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int expected_m3(int n, DominationKind kind) {
  const int base = ceil_div(4 * n, 5);
  return kind == DominationKind::Paired && (n % 5 == 1 || n % 5 == 3) ? base + 1 : base;
}

int expected_m4(int n) { return n % 4 == 0 ? n : n % 4 == 2 ? n + 2 : n + 1; }

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

bool certified(const SolveResult& r, int n, int m, DominationKind kind) {
  return r.certificate.size() == r.value && validates(make_torus({n, m}), r.certificate, kind);
}

SolveResult exact_dp(int n, int m, DominationKind kind) {
  return kind == DominationKind::Paired ? solve_paired(n, m) : solve_profile_dp(n, m, kind);
}

// Every paired value computed anywhere in the suite.
std::vector<std::pair<std::string, int>> g_paired_values;

void record_paired(int n, int m, int value) {
  g_paired_values.emplace_back("(" + std::to_string(n) + "," + std::to_string(m) + ")", value);
}

// Exact values for m = 3 and m = 4, filled by criteria 1 and 2.
std::vector<int> g_total[5];
std::vector<int> g_paired[5];

Outcome closed_form_rows(int m, int last, double budget) {
  const auto start = Clock::now();
  std::ostringstream bad;
  int checked = 0;
  for (int n = 3; n <= last; ++n) {
    for (DominationKind kind : {DominationKind::Total, DominationKind::Paired}) {
      const int expect = m == 3 ? expected_m3(n, kind) : expected_m4(n);
      const SolveResult r = solve(n, m, kind);
      ++checked;
      if (r.value != expect || !certified(r, n, m, kind)) {
        bad << " " << to_string(kind) << "(" << n << "," << m << ")=" << r.value << "!=" << expect;
      }
      if (n * m <= 20) {
        const SolveResult dp = exact_dp(n, m, kind);
        ++checked;
        if (dp.value != r.value) bad << " dp(" << n << "," << m << ")=" << dp.value << "!=oracle " << r.value;
      }
      (kind == DominationKind::Total ? g_total[m] : g_paired[m]).push_back(r.value);
      if (kind == DominationKind::Paired) record_paired(n, m, r.value);
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << checked << " solves for n in [3.." << last << "], m=" << m;
  if (!bad.str().empty()) detail << "; mismatches:" << bad.str();
  if (elapsed >= budget) detail << "; over the " << budget << " s budget";
  return {bad.str().empty() && elapsed < budget, detail.str()};
}

Outcome criterion_three_rungs() { return closed_form_rows(3, 13, kThreeRungBudget); }

Outcome criterion_four_rungs() {
  Outcome o = closed_form_rows(4, 10, kFourRungBudget);
  const int t64 = solve(6, 4, DominationKind::Total).value;
  const int t104 = solve(10, 4, DominationKind::Total).value;
  o.detail += "; total(6,4)=" + std::to_string(t64) + ", total(10,4)=" + std::to_string(t104);
  o.pass = o.pass && t64 == 8 && t104 == 12;
  return o;
}

Outcome criterion_mod4_sandwich() {
  const SolveResult t44 = solve(4, 4, DominationKind::Total);
  const SolveResult p44 = solve(4, 4, DominationKind::Paired);
  record_paired(4, 4, p44.value);
  const int lower = lower_bound_regular(8, 8);
  const ConstructionResult c = construct_mod4(8, 8);
  const TorusGraph g88 = make_torus({8, 8});
  const bool witness = c.set.size() == 16 && is_paired_dominating(g88, c.set) && is_total_dominating(g88, c.set);
  std::ostringstream d;
  d << "total(4,4)=" << t44.value << ", paired(4,4)=" << p44.value << "; G(8,8): lower " << lower
    << ", validated witness of size " << c.set.size();
  return {t44.value == 4 && p44.value == 4 && certified(t44, 4, 4, DominationKind::Total) &&
              certified(p44, 4, 4, DominationKind::Paired) && lower == 16 && witness,
          d.str()};
}

Outcome criterion_construction_sweep() {
  long long checked = 0;
  std::ostringstream bad;
  int failures = 0;
  auto check = [&](const ConstructionResult& r, int n, int m, std::optional<int> exact) {
    ++checked;
    const bool ok = r.set.dims() == TorusDims{n, m} && r.set.size() == r.claimed_cardinality &&
                    r.set.size() <= r.promised_bound && (!exact || r.set.size() == *exact) &&
                    validates(make_torus({n, m}), r.set, r.kind);
    if (!ok && failures++ < 5) bad << " " << r.provenance << "@(" << n << "," << m << ")";
  };
  for (int n = 3; n <= kSweepLimit; ++n) {
    for (DominationKind kind : {DominationKind::Total, DominationKind::Paired}) {
      check(construct_m3(n, kind), n, 3, expected_m3(n, kind));
    }
    check(construct_m4(n), n, 4, expected_m4(n));
  }
  for (int n = 4; n <= kSweepLimit; n += 4) {
    for (int m = 4; m <= kSweepLimit; m += 4) check(construct_mod4(n, m), n, m, n * m / 4);
  }
  for (int n = 5; n <= kSweepLimit; ++n) {
    for (int m = 5; m <= kSweepLimit; ++m) {
      for (DominationKind kind : {DominationKind::Total, DominationKind::Paired}) {
        if (auto r = construct_residue_class(n, m, kind)) check(*r, n, m, std::nullopt);
        check(construct_large(n, m, kind), n, m, std::nullopt);
      }
    }
  }
  std::ostringstream d;
  d << checked - failures << "/" << checked << " emitted sets validate at their claimed size";
  if (failures > 0) d << "; failing:" << bad.str();
  return {failures == 0, d.str()};
}

Outcome criterion_oracle_dp() {
  int agree = 0;
  int total = 0;
  std::ostringstream bad;
  for (int n = 3; n <= 6; ++n) {
    for (int m = 3; n * m <= 20; ++m) {
      for (DominationKind kind : {DominationKind::Plain, DominationKind::Total, DominationKind::Paired}) {
        const SolveResult a = solve_oracle(n, m, kind);
        const SolveResult b = exact_dp(n, m, kind);
        ++total;
        if (a.value == b.value && certified(a, n, m, kind) && certified(b, n, m, kind)) {
          ++agree;
        } else {
          bad << " " << to_string(kind) << "(" << n << "," << m << ") " << a.value << " vs " << b.value;
        }
        if (kind == DominationKind::Paired) {
          record_paired(n, m, a.value);
          record_paired(n, m, b.value);
        }
      }
    }
  }
  std::ostringstream d;
  d << agree << "/" << total << " instances agree" << bad.str();
  return {agree == total, d.str()};
}

Outcome criterion_bound_audit() {
  const auto start = Clock::now();
  struct Case {
    int n;
    int m;
    int bound;
  };
  bool pass = true;
  std::ostringstream d;
  for (const Case c : {Case{5, 5, 10}, Case{6, 5, 10}, Case{7, 5, 10}, Case{6, 6, 10}}) {
    const SolveResult r = solve_paired(c.n, c.m);
    record_paired(c.n, c.m, r.value);
    const int catalogued = upper_bounds(c.n, c.m, DominationKind::Paired).best_upper();
    const int lower = ceil_div(c.n * c.m, 4);
    const bool ok = certified(r, c.n, c.m, DominationKind::Paired) && r.value <= c.bound && catalogued <= c.bound &&
                    r.value >= lower;
    pass = pass && ok;
    d << "(" << c.n << "," << c.m << "): exact " << r.value << ", bound " << c.bound << ", gap " << c.bound - r.value
      << ", lower " << lower << "; ";
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kBoundAuditBudget) d << "over budget; ";
  return {pass && elapsed < kBoundAuditBudget, d.str()};
}

Outcome criterion_monotone_projection() {
  bool pass = true;
  std::ostringstream d;
  for (int m : {3, 4}) {
    for (const auto* values : {&g_total[m], &g_paired[m]}) {
      if (values->empty()) {
        pass = false;
        d << "no solved values for m=" << m << "; ";
      }
      for (std::size_t k = 1; k < values->size(); ++k) {
        if ((*values)[k - 1] > (*values)[k]) {
          pass = false;
          d << "decrease at m=" << m << ", n=" << k + 3 << "; ";
        }
      }
    }
  }
  d << "exact values nondecreasing in n for m in {3,4}; ";

  std::mt19937_64 rng(test_support::kTestSeed);
  int trials = 0;
  int failures = 0;
  int mirrored = 0;
  int over_repaired = 0;
  for (auto dims : {TorusDims{4, 3}, TorusDims{6, 4}, TorusDims{8, 5}, TorusDims{7, 7}, TorusDims{9, 6}}) {
    const TorusGraph big = make_torus(dims);
    const TorusGraph small = make_torus({dims.n - 1, dims.m});
    for (int trial = 0; trial < kProjectionTrials; ++trial) {
      const VertexSet t = test_support::random_total(big, 0.25, rng);
      const VertexSet p = test_support::random_paired(big, rng);
      trials += 2;
      try {
        const Projection pt = project_column(big, t, DominationKind::Total);
        if (!is_total_dominating(small, pt.set) || pt.set.size() > t.size()) ++failures;
        const Projection pp = project_column(big, p, DominationKind::Paired);
        if (!is_paired_dominating(small, pp.set) || pp.set.size() > p.size()) ++failures;
        if (pp.report.mirrored) ++mirrored;
        if (pp.report.repair_vertices.size() > pp.report.odd_components) ++over_repaired;
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  d << trials - failures << "/" << trials << " projections valid and no larger (" << kProjectionTrials
    << " total + " << kProjectionTrials << " paired inputs per size, " << mirrored << " mirrored, " << over_repaired
    << " with more repair vertices than odd components)";
  return {pass && failures == 0, d.str()};
}

Outcome criterion_efficient() {
  struct Case {
    int n;
    int m;
  };
  bool pass = true;
  std::ostringstream d;
  for (const Case c : {Case{4, 4}, Case{4, 8}, Case{8, 4}, Case{8, 8}, Case{5, 4}, Case{3, 3}, Case{6, 4},
                       Case{4, 6}, Case{8, 6}}) {
    const int total = solve(c.n, c.m, DominationKind::Total).value;
    const bool equality = (c.n * c.m) % 4 == 0 && total == c.n * c.m / 4;
    const auto found = find_efficient_tds(c.n, c.m);
    const bool ok = found.has_value() == equality &&
                    (!found || (found->size() == c.n * c.m / 4 && is_efficient_total(make_torus({c.n, c.m}), *found)));
    pass = pass && ok;
    d << "(" << c.n << "," << c.m << ")" << (found ? "+" : "-") << (ok ? "" : "!") << " ";
  }
  d << "(+ found, - none; agrees with total == nm/4)";
  return {pass, d.str()};
}

Outcome criterion_block_excision() {
  const auto stats = test_support::check_block_excision(7, kBlockExcisionMaxSize);
  std::ostringstream d;
  d << stats.sets << " total dominating sets of G(7,4) with size <= " << kBlockExcisionMaxSize << ", "
    << stats.applicable_blocks << " applicable blocks; " << stats.small_blocks << " blocks with fewer than 4 members, "
    << stats.failed_excisions << " failed excisions";
  return {stats.sets > 0 && stats.small_blocks == 0 && stats.failed_excisions == 0, d.str()};
}

Outcome criterion_parity() {
  std::ostringstream d;
  int odd = 0;
  for (const auto& [where, value] : g_paired_values) {
    if (value % 2 != 0) {
      ++odd;
      d << where << "=" << value << " ";
    }
  }
  d << g_paired_values.size() << " paired values checked, " << odd << " odd";
  return {odd == 0 && !g_paired_values.empty(), d.str()};
}

}  // namespace

int main() {
  Suite suite;
  suite.run(1, "three-rung closed forms", criterion_three_rungs);
  suite.run(2, "four-rung closed form", criterion_four_rungs);
  suite.run(3, "mod-4 sandwich", criterion_mod4_sandwich);
  suite.run(4, "construction validity sweep", criterion_construction_sweep);
  suite.run(5, "oracle-DP equivalence", criterion_oracle_dp);
  suite.run(6, "large-torus paired bound audit", criterion_bound_audit);
  suite.run(7, "monotonicity and projection", criterion_monotone_projection);
  suite.run(8, "efficient total domination", criterion_efficient);
  suite.run(9, "four-ring block excision", criterion_block_excision);
  suite.run(10, "paired parity", criterion_parity);
  return suite.all_pass() ? 0 : 1;
}
