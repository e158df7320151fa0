#pragma once

#include <vector>

namespace torusdom {

/// Maximum-cardinality matching on a general (non-bipartite) graph by
/// augmenting paths with blossom contraction.
///
/// The matching is kept between calls, so a caller that edits the graph
/// slightly can unmatch the affected vertices and re-augment instead of
/// starting over.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(int vertex_count);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v);
  /// Drops every edge at v and unmatches it (and its partner).
  void isolate(int v);
  void unmatch(int v);

  /// Tries one augmenting path from the free vertex root; true on success.
  bool augment_from(int root);
  /// Augments until no augmenting path is left. Returns the matching size.
  int maximize();

  /// Partner of v, or -1.
  int mate(int v) const { return mate_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& mates() const { return mate_; }
  /// Overwrites the matching; every listed pair must be an edge.
  void assign(std::vector<int> mates);
  int size() const;

 private:
  int lowest_common_base(int a, int b);
  void mark_path(int v, int b, int child);
  int find_path(int root);

  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
  std::vector<int> queue_;
};

}  // namespace torusdom
