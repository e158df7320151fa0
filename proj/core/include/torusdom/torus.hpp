#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace torusdom {

/// Dimensions of the toroidal mesh C_n x C_m. `n` counts rings (the index
/// `i` of x_ij), `m` counts rungs (the index `j`). Both cycles need length >= 3.
struct TorusDims {
  int n = 0;
  int m = 0;

  int order() const { return n * m; }
  TorusDims transposed() const { return {m, n}; }

  friend bool operator==(const TorusDims&, const TorusDims&) = default;
};

/// Throws Error{InvalidDimensions} unless n >= 3 and m >= 3.
void check_dims(TorusDims dims);

/// 1-based vertex x_ij.
struct VertexId {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Representative of x modulo len in [1..len].
constexpr int wrap_index(int x, int len) {
  int r = (x - 1) % len;
  if (r < 0) r += len;
  return r + 1;
}

/// Fixed-width bit set over the n*m vertex slots, row-major by (i, j):
/// slot = (i-1)*m + (j-1). Column Y_i therefore occupies a contiguous window.
class VertexSet {
 public:
  explicit VertexSet(TorusDims dims);
  VertexSet(TorusDims dims, std::initializer_list<VertexId> members);

  static VertexSet full(TorusDims dims);

  TorusDims dims() const { return dims_; }

  int slot(VertexId v) const;
  VertexId vertex(int slot) const;
  bool in_range(VertexId v) const;

  bool contains(VertexId v) const { return test(slot(v)); }
  bool test(int slot) const {
    return (words_[static_cast<std::size_t>(slot) >> 6] >> (slot & 63)) & 1u;
  }
  void insert(VertexId v) { set(slot(v)); }
  void erase(VertexId v) { reset(slot(v)); }
  void set(int slot) { words_[static_cast<std::size_t>(slot) >> 6] |= uint64_t{1} << (slot & 63); }
  void reset(int slot) { words_[static_cast<std::size_t>(slot) >> 6] &= ~(uint64_t{1} << (slot & 63)); }

  int size() const;
  bool empty() const { return size() == 0; }

  std::vector<int> slots() const;
  std::vector<VertexId> members() const;

  /// Membership of column Y_i as a bit mask; bit (j-1) stands for x_ij.
  uint32_t column_mask(int i) const;
  void set_column_mask(int i, uint32_t mask);
  int column_load(int i) const;

  /// Image under the automorphism x_ij -> x_{i+di, j+dj}.
  VertexSet rotated(int di, int dj) const;
  /// Image under x_ij -> x_ji, a set of the transposed torus.
  VertexSet transposed() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.dims_ == b.dims_ && a.words_ == b.words_;
  }
  /// Lexicographic order of the sorted slot lists (a set containing the
  /// smallest differing slot sorts first).
  bool lex_less(const VertexSet& other) const;

 private:
  void check_compatible(const VertexSet& other) const;

  TorusDims dims_;
  std::vector<uint64_t> words_;
};

using Edge = std::pair<VertexId, VertexId>;

/// The graph G_{n,m} = C_n x C_m. Adjacency is computed from the dimensions,
/// so values are small and immutable.
class TorusGraph {
 public:
  explicit TorusGraph(TorusDims dims);

  TorusDims dims() const { return dims_; }
  int n() const { return dims_.n; }
  int m() const { return dims_.m; }
  int order() const { return dims_.order(); }
  int edge_count() const { return 2 * dims_.order(); }

  bool contains(VertexId v) const;
  /// x_ij with both indices reduced cyclically.
  VertexId at(int i, int j) const { return {wrap_index(i, dims_.n), wrap_index(j, dims_.m)}; }
  int slot(VertexId v) const { return (v.i - 1) * dims_.m + (v.j - 1); }
  VertexId vertex(int slot) const { return {slot / dims_.m + 1, slot % dims_.m + 1}; }

  /// Order: x_{i-1,j}, x_{i+1,j}, x_{i,j-1}, x_{i,j+1}.
  std::array<VertexId, 4> neighbor_ids(VertexId v) const;
  std::array<int, 4> neighbor_slots(int slot) const;
  VertexSet neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;

  /// Y_i, the m vertices with ring index i.
  VertexSet column(int i) const;

  /// Slot-indexed adjacency lists, each sorted ascending.
  std::vector<std::array<int, 4>> adjacency() const;
  std::vector<Edge> edges() const;

 private:
  TorusDims dims_;
};

TorusGraph make_torus(TorusDims dims);

/// Edges of g with both endpoints in d, each listed once (smaller slot first).
std::vector<Edge> induced_edges(const TorusGraph& g, const VertexSet& d);

/// H_start^width = Y_start u ... u Y_{start+width-1} (ring indices mod n).
struct BlockRange {
  int start = 1;
  int width = 1;
};

VertexSet block_vertices(const TorusGraph& g, BlockRange block);

struct ExcisedGraph {
  TorusGraph graph;
  /// ring_remap[i] for old ring i in [1..n]: new ring index, or 0 if removed.
  std::vector<int> ring_remap;

  VertexId map_vertex(VertexId old) const { return {ring_remap[static_cast<std::size_t>(old.i)], old.j}; }
  /// Restriction of an old set to the surviving vertices, relabelled.
  VertexSet map_set(const VertexSet& old) const;
};

/// Remove the block H_i^j and join Y_{i-1} to Y_{i+j} rung by rung. The
/// surgery graph is built explicitly and checked against make_torus(n-j, m)
/// before it is returned.
ExcisedGraph excise_block(const TorusGraph& g, BlockRange block);

/// Edge list (in old labels) of G - H_i^j plus the stitching edges
/// {x_{(i-1)k} x_{(i+j)k}}.
std::vector<Edge> surgery_edges(const TorusGraph& g, BlockRange block);

}  // namespace torusdom
