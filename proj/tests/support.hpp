#pragma once

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "torusdom/torus.hpp"
#include "torusdom/validate.hpp"

namespace test_support {

inline uint64_t to_mask(const torusdom::VertexSet& d) {
  uint64_t mask = 0;
  for (int s : d.slots()) mask |= uint64_t{1} << s;
  return mask;
}

inline torusdom::VertexSet from_mask(torusdom::TorusDims dims, uint64_t mask) {
  torusdom::VertexSet d(dims);
  for (int s = 0; s < dims.order(); ++s) {
    if ((mask >> s) & 1u) d.set(s);
  }
  return d;
}

inline torusdom::VertexSet random_set(torusdom::TorusDims dims, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  torusdom::VertexSet d(dims);
  for (int s = 0; s < dims.order(); ++s) {
    if (coin(rng)) d.set(s);
  }
  return d;
}

// Random minimal-ish total dominating set: drop vertices of the full set in
// random order while totality survives, keeping each removable vertex with
// probability `keep`.
inline torusdom::VertexSet random_total(const torusdom::TorusGraph& g, double keep, std::mt19937_64& rng) {
  torusdom::VertexSet d = torusdom::VertexSet::full(g.dims());
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution stay(keep);
  for (int s : order) {
    d.reset(s);
    if (!torusdom::is_total_dominating(g, d) || stay(rng)) d.set(s);
  }
  return d;
}

// Random paired dominating set as a union of disjoint edges: add random
// disjoint edges until dominating, then drop whole pairs while domination
// survives.
inline torusdom::VertexSet random_paired(const torusdom::TorusGraph& g, std::mt19937_64& rng) {
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  torusdom::VertexSet d(g.dims());
  std::vector<torusdom::Edge> pairs;
  for (const auto& [a, b] : edges) {
    if (torusdom::is_dominating(g, d)) break;
    if (d.contains(a) || d.contains(b)) continue;
    d.insert(a);
    d.insert(b);
    pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto& [a, b] : pairs) {
    d.erase(a);
    d.erase(b);
    if (!torusdom::is_dominating(g, d)) {
      d.insert(a);
      d.insert(b);
    }
  }
  return d;
}

// Fixed seed so failures reproduce.
inline constexpr uint64_t kTestSeed = 0x5eed'2024'0917ull;

}  // namespace test_support
