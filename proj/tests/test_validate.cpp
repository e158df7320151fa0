#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "support.hpp"
#include "torusdom/constructions.hpp"
#include "torusdom/error.hpp"
#include "torusdom/solve.hpp"
#include "torusdom/validate.hpp"

using namespace torusdom;
using test_support::from_mask;
using test_support::to_mask;

namespace {

VertexSet figure_84() { return VertexSet({8, 4}, {{1, 1}, {1, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 3}, {7, 4}}); }

VertexSet figure_103() {
  return VertexSet({10, 3}, {{1, 2}, {2, 2}, {6, 2}, {7, 2}, {4, 1}, {4, 3}, {9, 1}, {9, 3}});
}

// Period-5 pattern on G(n,3) without any end patch.
VertexSet period5(int n) {
  VertexSet d({n, 3});
  for (int i = 1; i <= n; ++i) {
    if (i % 5 == 1 || i % 5 == 2) d.insert({i, 2});
    if (i % 5 == 4) {
      d.insert({i, 1});
      d.insert({i, 3});
    }
  }
  return d;
}

}  // namespace

TEST_CASE("multiplicity examples") {
  const TorusGraph g33 = make_torus({3, 3});
  const auto zero = domination_multiplicity(g33, VertexSet({3, 3}));
  CHECK(std::all_of(zero.begin(), zero.end(), [](int c) { return c == 0; }));
  const auto four = domination_multiplicity(g33, VertexSet::full({3, 3}));
  CHECK(std::all_of(four.begin(), four.end(), [](int c) { return c == 4; }));
  const auto one = domination_multiplicity(make_torus({8, 4}), figure_84());
  CHECK(one.size() == 32);
  CHECK(std::all_of(one.begin(), one.end(), [](int c) { return c == 1; }));
}

TEST_CASE("plain domination examples") {
  const TorusGraph g = make_torus({10, 3});
  CHECK(is_dominating(g, VertexSet::full({10, 3})));
  CHECK(is_dominating(g, figure_103()));
  CHECK_FALSE(is_dominating(make_torus({3, 3}), VertexSet({3, 3})));
  // Members need not be dominated.
  const TorusGraph g33 = make_torus({3, 3});
  CHECK(is_dominating(g33, VertexSet({3, 3}, {{1, 1}, {2, 2}, {3, 3}})));
  CHECK_FALSE(is_total_dominating(g33, VertexSet({3, 3}, {{1, 1}, {2, 2}, {3, 3}})));
}

TEST_CASE("total domination examples") {
  CHECK(is_total_dominating(make_torus({5, 3}), VertexSet({5, 3}, {{1, 2}, {2, 2}, {4, 1}, {4, 3}})));
  CHECK_FALSE(is_total_dominating(make_torus({3, 3}), VertexSet({3, 3}, {{2, 2}})));
  CHECK(is_total_dominating(make_torus({8, 4}), figure_84()));
}

TEST_CASE("perfect matching examples") {
  const TorusGraph g84 = make_torus({8, 4});
  const auto witness = has_perfect_matching(g84, figure_84());
  REQUIRE(witness);
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (auto [a, b] : witness->pairs) pairs.insert(std::minmax(a, b));
  CHECK(pairs == std::set<std::pair<VertexId, VertexId>>{
                     {{1, 1}, {1, 2}}, {{3, 3}, {3, 4}}, {{5, 1}, {5, 2}}, {{7, 3}, {7, 4}}});
  CHECK_FALSE(has_perfect_matching(g84, VertexSet({8, 4}, {{1, 1}, {1, 2}, {2, 2}})));
  CHECK_FALSE(has_perfect_matching(make_torus({5, 4}), VertexSet({5, 4}, {{1, 1}, {1, 3}})));
  CHECK(has_perfect_matching(g84, VertexSet({8, 4})));
}

TEST_CASE("paired domination examples") {
  CHECK(is_paired_dominating(make_torus({10, 3}), figure_103()));

  // n = 8: the total patch alone is total dominating but not perfectly matched.
  const TorusGraph g83 = make_torus({8, 3});
  VertexSet total_patch = period5(8);
  total_patch.insert({8, 2});
  CHECK(is_total_dominating(g83, total_patch));
  CHECK_FALSE(is_paired_dominating(g83, total_patch));
  VertexSet paired_patch = period5(8);
  paired_patch.insert({8, 1});
  paired_patch.insert({8, 2});
  CHECK(is_paired_dominating(g83, paired_patch));

  for (auto dims : {TorusDims{4, 3}, TorusDims{5, 4}, TorusDims{6, 6}, TorusDims{3, 8}}) {
    CHECK(is_paired_dominating(make_torus(dims), VertexSet::full(dims)));
  }
}

TEST_CASE("efficient total domination examples") {
  CHECK(is_efficient_total(make_torus({8, 4}), figure_84()));
  CHECK_FALSE(is_efficient_total(make_torus({8, 4}), VertexSet::full({8, 4})));
  const VertexSet crowded({5, 3}, {{1, 1}, {1, 2}, {1, 3}, {2, 1}});
  const auto hits = domination_multiplicity(make_torus({5, 3}), crowded);
  CHECK(*std::max_element(hits.begin(), hits.end()) >= 2);
  CHECK_FALSE(is_efficient_total(make_torus({5, 3}), crowded));
}

TEST_CASE("column profile examples") {
  const ColumnProfile fig = column_profile(make_torus({10, 3}), figure_103());
  CHECK(fig.count(0) == 4);
  CHECK(fig.count(1) == 4);
  CHECK(fig.count(2) == 2);
  CHECK(fig.count(3) == 0);
  CHECK(fig.column_count == AuditStatus::Holds);
  CHECK(fig.pair_surplus == AuditStatus::Holds);
  CHECK(fig.coverage == AuditStatus::Holds);

  const ColumnProfile empty = column_profile(make_torus({6, 3}), VertexSet({6, 3}));
  CHECK(empty.count(0) == 6);

  const TorusGraph g73 = make_torus({7, 3});
  const VertexSet minimum = solve(7, 3, DominationKind::Total).certificate;
  const ColumnProfile normalized = column_profile(g73, normalize_columns_m3(g73, minimum).set);
  CHECK(normalized.column_count == AuditStatus::Holds);
  CHECK(normalized.pair_surplus == AuditStatus::Holds);
  CHECK(normalized.coverage == AuditStatus::Holds);

  // Loads above 2 or m != 3 leave the inequalities inapplicable.
  const ColumnProfile full = column_profile(make_torus({5, 3}), VertexSet::full({5, 3}));
  CHECK(full.count(3) == 5);
  CHECK(full.pair_surplus == AuditStatus::NotApplicable);
  const ColumnProfile wide = column_profile(make_torus({8, 4}), figure_84());
  CHECK(wide.pair_surplus == AuditStatus::NotApplicable);
  CHECK(wide.count(0) + wide.count(2) == 8);
}

TEST_CASE("validators reject sets from another torus") {
  CHECK_THROWS_AS(is_dominating(make_torus({5, 3}), VertexSet({3, 5})), Error);
  CHECK_THROWS_AS(has_perfect_matching(make_torus({5, 3}), VertexSet({5, 4})), Error);
}

TEST_CASE("predicates agree with the reference on random sets") {
  std::mt19937_64 rng(test_support::kTestSeed);
  for (auto dims : {TorusDims{3, 3}, TorusDims{5, 3}, TorusDims{4, 6}, TorusDims{7, 5}, TorusDims{8, 8}}) {
    const TorusGraph g = make_torus(dims);
    const oracle::Torus ref{dims.n, dims.m};
    for (int trial = 0; trial < 400; ++trial) {
      const VertexSet d = test_support::random_set(dims, 0.15 + 0.5 * (trial % 4) / 4.0, rng);
      const uint64_t mask = to_mask(d);
      const bool plain = is_dominating(g, d);
      const bool total = is_total_dominating(g, d);
      const bool paired = is_paired_dominating(g, d);
      const bool efficient = is_efficient_total(g, d);
      CHECK(plain == ref.dominating(mask));
      CHECK(total == ref.total(mask));
      CHECK(efficient == ref.efficient(mask));
      if (d.size() <= 16) CHECK(paired == ref.paired(mask));
      // Class chain.
      if (paired) CHECK(plain);
      if (total) CHECK(plain);
      if (efficient) CHECK(total);
      const auto hits = domination_multiplicity(g, d);
      CHECK(total == (*std::min_element(hits.begin(), hits.end()) >= 1));
      for (int s = 0; s < g.order(); ++s) CHECK(hits[static_cast<std::size_t>(s)] == ref.hits(mask, s));
    }
  }
}

TEST_CASE("matching witnesses are sound") {
  std::mt19937_64 rng(test_support::kTestSeed + 1);
  for (auto dims : {TorusDims{4, 4}, TorusDims{6, 5}, TorusDims{9, 7}}) {
    const TorusGraph g = make_torus(dims);
    for (int trial = 0; trial < 300; ++trial) {
      const VertexSet d = test_support::random_set(dims, 0.5, rng);
      const auto witness = has_perfect_matching(g, d);
      if (!witness) continue;
      VertexSet covered(dims);
      for (auto [a, b] : witness->pairs) {
        CHECK(g.adjacent(a, b));
        CHECK(d.contains(a));
        CHECK(d.contains(b));
        CHECK_FALSE(covered.contains(a));
        CHECK_FALSE(covered.contains(b));
        covered.insert(a);
        covered.insert(b);
      }
      CHECK(covered == d);
    }
  }
}

TEST_CASE("matching is complete against exhaustive pairing") {
  // Every subset of at most 12 vertices on the small tori.
  for (auto dims : {TorusDims{3, 3}, TorusDims{3, 4}, TorusDims{4, 3}, TorusDims{3, 5}, TorusDims{4, 4}}) {
    const TorusGraph g = make_torus(dims);
    const oracle::Torus ref{dims.n, dims.m};
    for (uint64_t mask = 0; mask <= ref.all(); ++mask) {
      if (std::popcount(mask) > 12 || std::popcount(mask) % 2 != 0) continue;
      const bool found = has_perfect_matching(g, from_mask(dims, mask)).has_value();
      if (found != ref.perfectly_matched(mask)) {
        FAIL_CHECK("mismatch on mask " << mask);
      }
    }
  }
  // Random subsets of at most 12 vertices on the remaining tori up to 24 vertices.
  std::mt19937_64 rng(test_support::kTestSeed + 2);
  for (auto dims : {TorusDims{4, 5}, TorusDims{5, 4}, TorusDims{3, 7}, TorusDims{3, 8}, TorusDims{4, 6}, TorusDims{6, 4}}) {
    const TorusGraph g = make_torus(dims);
    const oracle::Torus ref{dims.n, dims.m};
    std::uniform_int_distribution<int> size(1, 6);
    for (int trial = 0; trial < 20000; ++trial) {
      std::vector<int> slots(static_cast<std::size_t>(dims.order()));
      std::iota(slots.begin(), slots.end(), 0);
      std::shuffle(slots.begin(), slots.end(), rng);
      uint64_t mask = 0;
      const int k = 2 * size(rng);
      for (int t = 0; t < k; ++t) mask |= uint64_t{1} << slots[static_cast<std::size_t>(t)];
      CHECK(has_perfect_matching(g, from_mask(dims, mask)).has_value() == ref.perfectly_matched(mask));
    }
  }
}

TEST_CASE("predicates are invariant under rotation") {
  std::mt19937_64 rng(test_support::kTestSeed + 3);
  for (auto dims : {TorusDims{5, 3}, TorusDims{6, 4}, TorusDims{7, 6}}) {
    const TorusGraph g = make_torus(dims);
    for (int trial = 0; trial < 100; ++trial) {
      const VertexSet d = test_support::random_set(dims, 0.4, rng);
      const int a = static_cast<int>(rng() % 9);
      const int b = static_cast<int>(rng() % 9);
      const VertexSet r = d.rotated(a, b);
      CHECK(is_dominating(g, d) == is_dominating(g, r));
      CHECK(is_total_dominating(g, d) == is_total_dominating(g, r));
      CHECK(is_paired_dominating(g, d) == is_paired_dominating(g, r));
      CHECK(is_efficient_total(g, d) == is_efficient_total(g, r));
    }
    // Rotations of valid witnesses stay valid.
    const VertexSet witness = best_construction(dims.n, dims.m, DominationKind::Paired).set;
    for (int a = 0; a < dims.n; ++a) {
      for (int b = 0; b < dims.m; ++b) CHECK(is_paired_dominating(g, witness.rotated(a, b)));
    }
  }
}

TEST_CASE("a vertex hit twice has a doubly hit vertex within one ring (G(n,4), n = 5, 6, 7)") {
  for (int n = 5; n <= 7; ++n) {
    const oracle::Torus t{n, 4};
    const oracle::Shifts shifts(t);
    auto ring_window = [&](int ring) {
      // Rings ring-1, ring, ring+1 (0-based, cyclic): H_{i-1}^2 union H_i^2.
      uint64_t w = 0;
      for (int k = -1; k <= 1; ++k) w |= uint64_t{0xF} << (4 * ((ring + k + n) % n));
      return w;
    };
    long long total_sets = 0;
    long long violations = 0;
    for (uint64_t d = 0; d <= t.all(); ++d) {
      if (!shifts.total(d)) continue;
      ++total_sets;
      uint64_t twice = shifts.covered_twice(d);
      for (uint64_t rest = twice; rest != 0; rest &= rest - 1) {
        const int s = std::countr_zero(rest);
        if ((twice & ring_window(s / 4)) == 0) ++violations;
      }
    }
    CAPTURE(n);
    CHECK(total_sets > 0);
    CHECK(violations == 0);
  }
}

TEST_CASE("no total dominating set beats ceil(nm/4)") {
  for (auto dims : {TorusDims{3, 3}, TorusDims{4, 4}, TorusDims{5, 3}, TorusDims{5, 4}}) {
    const oracle::Torus t{dims.n, dims.m};
    const TorusGraph g = make_torus(dims);
    const int bound = (dims.order() + 3) / 4;
    for (int k = 0; k < bound; ++k) {
      CHECK_FALSE(oracle::for_each_subset(t.order(), k, [&](uint64_t d) {
        return is_total_dominating(g, from_mask(dims, d));
      }));
    }
  }
}

TEST_CASE("bit-parallel reference agrees with the per-vertex reference") {
  std::mt19937_64 rng(test_support::kTestSeed + 4);
  for (auto dims : {TorusDims{5, 4}, TorusDims{3, 7}, TorusDims{8, 8}}) {
    const oracle::Torus t{dims.n, dims.m};
    const oracle::Shifts shifts(t);
    for (int trial = 0; trial < 500; ++trial) {
      const uint64_t d = rng() & t.all();
      CHECK(shifts.total(d) == t.total(d));
      uint64_t twice = 0;
      for (int s = 0; s < t.order(); ++s) {
        if (t.hits(d, s) >= 2) twice |= uint64_t{1} << s;
      }
      CHECK(shifts.covered_twice(d) == twice);
    }
  }
}
