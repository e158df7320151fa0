#pragma once

// Reference implementations used only by tests. They share no code with the
// library: adjacency is recomputed from 0-based coordinates, sets are plain
// bitmasks over at most 64 slots, and matchings are found by exhaustive
// pairing.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

struct Torus {
  int n;
  int m;

  int order() const { return n * m; }
  int at(int r, int c) const { return ((r % n + n) % n) * m + ((c % m + m) % m); }

  // Open neighbourhood of slot s as a mask.
  uint64_t nbr(int s) const {
    const int r = s / m;
    const int c = s % m;
    return (uint64_t{1} << at(r - 1, c)) | (uint64_t{1} << at(r + 1, c)) | (uint64_t{1} << at(r, c - 1)) |
           (uint64_t{1} << at(r, c + 1));
  }

  uint64_t all() const { return order() == 64 ? ~uint64_t{0} : (uint64_t{1} << order()) - 1; }

  bool dominating(uint64_t d) const {
    for (int s = 0; s < order(); ++s) {
      if (((d >> s) & 1u) == 0 && (nbr(s) & d) == 0) return false;
    }
    return true;
  }

  bool total(uint64_t d) const {
    for (int s = 0; s < order(); ++s) {
      if ((nbr(s) & d) == 0) return false;
    }
    return true;
  }

  int hits(uint64_t d, int s) const { return std::popcount(nbr(s) & d); }

  // Exhaustive pairing: the lowest remaining member must pair with one of
  // its neighbours inside the set.
  bool perfectly_matched(uint64_t d) const {
    if (d == 0) return true;
    if (std::popcount(d) % 2 != 0) return false;
    const int low = std::countr_zero(d);
    const uint64_t rest = d & ~(uint64_t{1} << low);
    uint64_t partners = nbr(low) & rest;
    while (partners != 0) {
      const int p = std::countr_zero(partners);
      partners &= partners - 1;
      if (perfectly_matched(rest & ~(uint64_t{1} << p))) return true;
    }
    return false;
  }

  bool paired(uint64_t d) const { return dominating(d) && perfectly_matched(d); }

  bool efficient(uint64_t d) const {
    for (int s = 0; s < order(); ++s) {
      if (hits(d, s) != 1) return false;
    }
    return true;
  }
};

enum class Kind { Plain, Total, Paired };

inline bool holds(const Torus& t, uint64_t d, Kind kind) {
  switch (kind) {
    case Kind::Plain:
      return t.dominating(d);
    case Kind::Total:
      return t.total(d);
    case Kind::Paired:
      return t.paired(d);
  }
  return false;
}

// Visits every k-subset of the first `bits` slots in increasing numeric order.
template <class Visit>
bool for_each_subset(int bits, int k, Visit&& visit) {
  if (k == 0) return visit(uint64_t{0});
  if (k > bits) return false;
  uint64_t s = (uint64_t{1} << k) - 1;
  const uint64_t limit = uint64_t{1} << bits;
  while (s < limit) {
    if (visit(s)) return true;
    const uint64_t c = s & (~s + 1);
    const uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

// Minimum by brute force over subsets of increasing size; order() <= 24.
inline int minimum(const Torus& t, Kind kind) {
  for (int k = 1; k <= t.order(); ++k) {
    if (for_each_subset(t.order(), k, [&](uint64_t d) { return holds(t, d, kind); })) return k;
  }
  return -1;
}

}  // namespace oracle

namespace oracle {

// Bit-parallel neighbourhood counts for order() <= 64.
struct Shifts {
  Torus t;
  uint64_t first_rung = 0;  // slots with rung offset 0
  uint64_t last_rung = 0;   // slots with rung offset m-1

  explicit Shifts(Torus torus) : t(torus) {
    for (int r = 0; r < t.n; ++r) {
      first_rung |= uint64_t{1} << (r * t.m);
      last_rung |= uint64_t{1} << (r * t.m + t.m - 1);
    }
  }

  // The four masks of vertices whose neighbour in one direction lies in d.
  std::array<uint64_t, 4> sides(uint64_t d) const {
    const int nm = t.order();
    const int m = t.m;
    const uint64_t all = t.all();
    const uint64_t right = ((d >> 1) & ~last_rung) | ((d << (m - 1)) & last_rung);
    const uint64_t left = ((d << 1) & ~first_rung & all) | ((d >> (m - 1)) & first_rung);
    const uint64_t down = ((d >> m) | (d << (nm - m))) & all;
    const uint64_t up = ((d << m) & all) | (d >> (nm - m));
    return {right, left, down, up};
  }

  uint64_t covered(uint64_t d) const {
    const auto s = sides(d);
    return s[0] | s[1] | s[2] | s[3];
  }

  uint64_t covered_twice(uint64_t d) const {
    const auto [a, b, c, e] = sides(d);
    return (a & b) | (a & c) | (a & e) | (b & c) | (b & e) | (c & e);
  }

  bool total(uint64_t d) const { return covered(d) == t.all(); }
};

}  // namespace oracle
