#include "torusdom/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace torusdom {

BlossomMatcher::BlossomMatcher(int vertex_count)
    : adj_(static_cast<std::size_t>(vertex_count)),
      mate_(static_cast<std::size_t>(vertex_count), -1),
      parent_(static_cast<std::size_t>(vertex_count), -1),
      base_(static_cast<std::size_t>(vertex_count), 0),
      used_(static_cast<std::size_t>(vertex_count), 0),
      blossom_(static_cast<std::size_t>(vertex_count), 0) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void BlossomMatcher::add_edge(int u, int v) {
  if (u == v) return;
  auto& au = adj_[static_cast<std::size_t>(u)];
  if (std::find(au.begin(), au.end(), v) != au.end()) return;
  au.push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
}

void BlossomMatcher::unmatch(int v) {
  int w = mate_[static_cast<std::size_t>(v)];
  if (w >= 0) mate_[static_cast<std::size_t>(w)] = -1;
  mate_[static_cast<std::size_t>(v)] = -1;
}

void BlossomMatcher::isolate(int v) {
  unmatch(v);
  for (int w : adj_[static_cast<std::size_t>(v)]) {
    auto& aw = adj_[static_cast<std::size_t>(w)];
    aw.erase(std::remove(aw.begin(), aw.end(), v), aw.end());
  }
  adj_[static_cast<std::size_t>(v)].clear();
}

void BlossomMatcher::assign(std::vector<int> mates) {
  if (mates.size() != mate_.size()) throw std::invalid_argument("matching size mismatch");
  mate_ = std::move(mates);
}

int BlossomMatcher::size() const {
  int matched = 0;
  for (int m : mate_) matched += m >= 0 ? 1 : 0;
  return matched / 2;
}

int BlossomMatcher::lowest_common_base(int a, int b) {
  std::vector<char> seen(adj_.size(), 0);
  for (;;) {
    a = base_[static_cast<std::size_t>(a)];
    seen[static_cast<std::size_t>(a)] = 1;
    if (mate_[static_cast<std::size_t>(a)] == -1) break;
    a = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
  }
  for (;;) {
    b = base_[static_cast<std::size_t>(b)];
    if (seen[static_cast<std::size_t>(b)]) return b;
    b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
  }
}

void BlossomMatcher::mark_path(int v, int b, int child) {
  while (base_[static_cast<std::size_t>(v)] != b) {
    int mv = mate_[static_cast<std::size_t>(v)];
    blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
    blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
    parent_[static_cast<std::size_t>(v)] = child;
    child = mv;
    v = parent_[static_cast<std::size_t>(mv)];
  }
}

// BFS over alternating trees rooted at `root`; returns the free endpoint of
// an augmenting path, or -1. Blossoms are contracted through base_.
int BlossomMatcher::find_path(int root) {
  const std::size_t count = adj_.size();
  std::fill(used_.begin(), used_.end(), 0);
  std::fill(parent_.begin(), parent_.end(), -1);
  for (std::size_t v = 0; v < count; ++v) base_[v] = static_cast<int>(v);

  queue_.clear();
  used_[static_cast<std::size_t>(root)] = 1;
  queue_.push_back(root);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    int v = queue_[head];
    for (int to : adj_[static_cast<std::size_t>(v)]) {
      const auto t = static_cast<std::size_t>(to);
      if (base_[static_cast<std::size_t>(v)] == base_[t] || mate_[static_cast<std::size_t>(v)] == to) continue;
      if (to == root || (mate_[t] != -1 && parent_[static_cast<std::size_t>(mate_[t])] != -1)) {
        int cur = lowest_common_base(v, to);
        std::fill(blossom_.begin(), blossom_.end(), 0);
        mark_path(v, cur, to);
        mark_path(to, cur, v);
        for (std::size_t i = 0; i < count; ++i) {
          if (blossom_[static_cast<std::size_t>(base_[i])]) {
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue_.push_back(static_cast<int>(i));
            }
          }
        }
      } else if (parent_[t] == -1) {
        parent_[t] = v;
        if (mate_[t] == -1) return to;
        const auto mt = static_cast<std::size_t>(mate_[t]);
        used_[mt] = 1;
        queue_.push_back(mate_[t]);
      }
    }
  }
  return -1;
}

bool BlossomMatcher::augment_from(int root) {
  if (mate_[static_cast<std::size_t>(root)] != -1) return false;
  int v = find_path(root);
  if (v == -1) return false;
  while (v != -1) {
    int pv = parent_[static_cast<std::size_t>(v)];
    int ppv = mate_[static_cast<std::size_t>(pv)];
    mate_[static_cast<std::size_t>(v)] = pv;
    mate_[static_cast<std::size_t>(pv)] = v;
    v = ppv;
  }
  return true;
}

int BlossomMatcher::maximize() {
  // Greedy seed first; the augmenting phase only has to fix what is left.
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if (mate_[v] != -1) continue;
    for (int w : adj_[v]) {
      if (mate_[static_cast<std::size_t>(w)] == -1) {
        mate_[v] = w;
        mate_[static_cast<std::size_t>(w)] = static_cast<int>(v);
        break;
      }
    }
  }
  for (int v = 0; v < vertex_count(); ++v) {
    if (mate_[static_cast<std::size_t>(v)] == -1) augment_from(v);
  }
  return size();
}

}  // namespace torusdom
