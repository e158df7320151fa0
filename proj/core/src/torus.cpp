#include "torusdom/torus.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "torusdom/error.hpp"

namespace torusdom {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimensions: return "invalid-dimensions";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::TooSmall: return "too-small";
    case ErrorCode::WrongCongruence: return "wrong-congruence";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InstanceTooLarge: return "instance-too-large";
    case ErrorCode::NotInClass: return "not-in-class";
    case ErrorCode::ConstructionInvalid: return "construction-invalid";
    case ErrorCode::UnsupportedClass: return "unsupported-class";
    case ErrorCode::MalformedInput: return "malformed-input";
  }
  return "unknown";
}

void check_dims(TorusDims dims) {
  if (dims.n < 3 || dims.m < 3) {
    std::ostringstream os;
    os << "torus dimensions must both be >= 3, got (" << dims.n << ", " << dims.m << ")";
    throw Error(ErrorCode::InvalidDimensions, os.str());
  }
}

namespace {

std::size_t word_count(TorusDims dims) {
  return (static_cast<std::size_t>(dims.order()) + 63) / 64;
}

[[noreturn]] void throw_out_of_range(VertexId v, TorusDims dims) {
  std::ostringstream os;
  os << "vertex x(" << v.i << "," << v.j << ") outside G(" << dims.n << "," << dims.m << ")";
  throw Error(ErrorCode::OutOfRange, os.str());
}

}  // namespace

// --- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(TorusDims dims) : dims_(dims) {
  check_dims(dims);
  words_.assign(word_count(dims), 0);
}

VertexSet::VertexSet(TorusDims dims, std::initializer_list<VertexId> members)
    : VertexSet(dims) {
  for (const auto& v : members) insert(v);
}

VertexSet VertexSet::full(TorusDims dims) {
  VertexSet s(dims);
  for (int k = 0; k < dims.order(); ++k) s.set(k);
  return s;
}

bool VertexSet::in_range(VertexId v) const {
  return v.i >= 1 && v.i <= dims_.n && v.j >= 1 && v.j <= dims_.m;
}

int VertexSet::slot(VertexId v) const {
  if (!in_range(v)) throw_out_of_range(v, dims_);
  return (v.i - 1) * dims_.m + (v.j - 1);
}

VertexId VertexSet::vertex(int slot) const {
  if (slot < 0 || slot >= dims_.order()) {
    throw Error(ErrorCode::OutOfRange, "slot " + std::to_string(slot) + " out of range");
  }
  return {slot / dims_.m + 1, slot % dims_.m + 1};
}

int VertexSet::size() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> VertexSet::slots() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits != 0) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64) + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (int s : slots()) out.push_back(vertex(s));
  return out;
}

uint32_t VertexSet::column_mask(int i) const {
  if (i < 1 || i > dims_.n) throw_out_of_range({i, 1}, dims_);
  if (dims_.m > 32) throw Error(ErrorCode::OutOfRange, "column masks need m <= 32");
  uint32_t mask = 0;
  int base = (i - 1) * dims_.m;
  for (int j = 0; j < dims_.m; ++j) {
    if (test(base + j)) mask |= uint32_t{1} << j;
  }
  return mask;
}

void VertexSet::set_column_mask(int i, uint32_t mask) {
  if (i < 1 || i > dims_.n) throw_out_of_range({i, 1}, dims_);
  if (dims_.m > 32) throw Error(ErrorCode::OutOfRange, "column masks need m <= 32");
  int base = (i - 1) * dims_.m;
  for (int j = 0; j < dims_.m; ++j) {
    if ((mask >> j) & 1u) {
      set(base + j);
    } else {
      reset(base + j);
    }
  }
}

int VertexSet::column_load(int i) const {
  if (i < 1 || i > dims_.n) throw_out_of_range({i, 1}, dims_);
  int load = 0;
  int base = (i - 1) * dims_.m;
  for (int j = 0; j < dims_.m; ++j) load += test(base + j) ? 1 : 0;
  return load;
}

VertexSet VertexSet::rotated(int di, int dj) const {
  VertexSet out(dims_);
  for (int s : slots()) {
    VertexId v = vertex(s);
    out.insert({wrap_index(v.i + di, dims_.n), wrap_index(v.j + dj, dims_.m)});
  }
  return out;
}

VertexSet VertexSet::transposed() const {
  VertexSet out(dims_.transposed());
  for (int s : slots()) {
    VertexId v = vertex(s);
    out.insert({v.j, v.i});
  }
  return out;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (!(dims_ == other.dims_)) {
    throw Error(ErrorCode::InvalidArgument, "vertex sets belong to different tori");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    uint64_t diff = words_[w] ^ other.words_[w];
    if (diff == 0) continue;
    int first = static_cast<int>(w * 64) + std::countr_zero(diff);
    const VertexSet& owner = test(first) ? *this : other;
    const VertexSet& rest = test(first) ? other : *this;
    // Equal prefixes up to `first`; the list that stops there is a proper
    // prefix of the other one and sorts first.
    bool rest_continues = false;
    for (int s = first + 1; s < dims_.order() && !rest_continues; ++s) rest_continues = rest.test(s);
    bool owner_wins = rest_continues;
    return (&owner == this) == owner_wins;
  }
  return false;
}

// --- TorusGraph ------------------------------------------------------------

TorusGraph::TorusGraph(TorusDims dims) : dims_(dims) { check_dims(dims); }

TorusGraph make_torus(TorusDims dims) { return TorusGraph(dims); }

bool TorusGraph::contains(VertexId v) const {
  return v.i >= 1 && v.i <= dims_.n && v.j >= 1 && v.j <= dims_.m;
}

std::array<VertexId, 4> TorusGraph::neighbor_ids(VertexId v) const {
  if (!contains(v)) throw_out_of_range(v, dims_);
  return {at(v.i - 1, v.j), at(v.i + 1, v.j), at(v.i, v.j - 1), at(v.i, v.j + 1)};
}

std::array<int, 4> TorusGraph::neighbor_slots(int s) const {
  const int m = dims_.m;
  const int n = dims_.n;
  const int i = s / m;
  const int j = s % m;
  return {((i + n - 1) % n) * m + j, ((i + 1) % n) * m + j, i * m + (j + m - 1) % m,
          i * m + (j + 1) % m};
}

VertexSet TorusGraph::neighbors(VertexId v) const {
  VertexSet out(dims_);
  for (const auto& u : neighbor_ids(v)) out.insert(u);
  return out;
}

bool TorusGraph::adjacent(VertexId a, VertexId b) const {
  for (const auto& u : neighbor_ids(a)) {
    if (u == b) return true;
  }
  return false;
}

VertexSet TorusGraph::column(int i) const {
  if (i < 1 || i > dims_.n) throw_out_of_range({i, 1}, dims_);
  VertexSet out(dims_);
  for (int j = 1; j <= dims_.m; ++j) out.insert({i, j});
  return out;
}

std::vector<std::array<int, 4>> TorusGraph::adjacency() const {
  std::vector<std::array<int, 4>> adj(static_cast<std::size_t>(order()));
  for (int s = 0; s < order(); ++s) {
    auto nb = neighbor_slots(s);
    std::sort(nb.begin(), nb.end());
    adj[static_cast<std::size_t>(s)] = nb;
  }
  return adj;
}

std::vector<Edge> TorusGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int s = 0; s < order(); ++s) {
    for (int t : neighbor_slots(s)) {
      if (t > s) out.emplace_back(vertex(s), vertex(t));
    }
  }
  return out;
}

std::vector<Edge> induced_edges(const TorusGraph& g, const VertexSet& d) {
  if (!(d.dims() == g.dims())) {
    throw Error(ErrorCode::InvalidArgument, "vertex set does not belong to this torus");
  }
  std::vector<Edge> out;
  for (int s : d.slots()) {
    for (int t : g.neighbor_slots(s)) {
      if (t > s && d.test(t)) out.emplace_back(g.vertex(s), g.vertex(t));
    }
  }
  return out;
}

VertexSet block_vertices(const TorusGraph& g, BlockRange block) {
  VertexSet out(g.dims());
  for (int k = 0; k < block.width; ++k) out |= g.column(wrap_index(block.start + k, g.n()));
  return out;
}

namespace {

void check_block(const TorusGraph& g, BlockRange block) {
  if (block.start < 1 || block.start > g.n()) {
    throw Error(ErrorCode::OutOfRange, "block start outside [1..n]");
  }
  if (block.width < 1 || block.width >= g.n()) {
    throw Error(ErrorCode::OutOfRange, "block width must satisfy 1 <= width < n");
  }
  if (g.n() - block.width < 3) {
    throw Error(ErrorCode::TooSmall, "excision would leave fewer than 3 rings (n - width = " +
                                         std::to_string(g.n() - block.width) + ")");
  }
}

}  // namespace

std::vector<Edge> surgery_edges(const TorusGraph& g, BlockRange block) {
  check_block(g, block);
  VertexSet removed = block_vertices(g, block);
  std::vector<Edge> out;
  for (const auto& [a, b] : g.edges()) {
    if (!removed.contains(a) && !removed.contains(b)) out.emplace_back(a, b);
  }
  const int before = wrap_index(block.start - 1, g.n());
  const int after = wrap_index(block.start + block.width, g.n());
  for (int k = 1; k <= g.m(); ++k) out.emplace_back(VertexId{before, k}, VertexId{after, k});
  return out;
}

VertexSet ExcisedGraph::map_set(const VertexSet& old) const {
  VertexSet out(graph.dims());
  for (const auto& v : old.members()) {
    int ni = ring_remap[static_cast<std::size_t>(v.i)];
    if (ni != 0) out.insert({ni, v.j});
  }
  return out;
}

ExcisedGraph excise_block(const TorusGraph& g, BlockRange block) {
  check_block(g, block);
  const int n = g.n();
  std::vector<int> remap(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> gone(static_cast<std::size_t>(n) + 1, false);
  for (int k = 0; k < block.width; ++k) gone[static_cast<std::size_t>(wrap_index(block.start + k, n))] = true;
  int next = 1;
  for (int i = 1; i <= n; ++i) {
    if (!gone[static_cast<std::size_t>(i)]) remap[static_cast<std::size_t>(i)] = next++;
  }

  ExcisedGraph result{TorusGraph({n - block.width, g.m()}), remap};

  // Rebuild the surgery graph in new labels and compare with the torus.
  const TorusGraph& h = result.graph;
  std::vector<std::vector<int>> built(static_cast<std::size_t>(h.order()));
  for (const auto& [a, b] : surgery_edges(g, block)) {
    int sa = h.slot(result.map_vertex(a));
    int sb = h.slot(result.map_vertex(b));
    built[static_cast<std::size_t>(sa)].push_back(sb);
    built[static_cast<std::size_t>(sb)].push_back(sa);
  }
  auto expected = h.adjacency();
  for (int s = 0; s < h.order(); ++s) {
    auto& row = built[static_cast<std::size_t>(s)];
    std::sort(row.begin(), row.end());
    const auto& want = expected[static_cast<std::size_t>(s)];
    if (!std::equal(row.begin(), row.end(), want.begin(), want.end())) {
      throw std::logic_error("excised graph is not isomorphic to the smaller torus under the ring remap");
    }
  }
  return result;
}

}  // namespace torusdom
