#include "torusdom/solve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "torusdom/constructions.hpp"
#include "torusdom/error.hpp"
#include "torusdom/formulas.hpp"

namespace torusdom {

const char* to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::Oracle: return "oracle";
    case SolveMethod::ProfileDP: return "dp";
    case SolveMethod::PairedSearch: return "paired-search";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

std::string dims_text(int n, int m) {
  return "G(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

SolveResult finish(VertexSet cert, DominationKind kind, SolveMethod method, Clock::time_point start) {
  TorusGraph g(cert.dims());
  if (!validates(g, cert, kind)) throw std::logic_error("solver certificate failed validation");
  SolveResult r{cert.size(), std::move(cert), kind, method, {}};
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

int worker_count(const SolveOptions& options, std::size_t jobs) {
  int w = options.workers > 0 ? options.workers : static_cast<int>(std::thread::hardware_concurrency());
  w = std::max(1, w);
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(w), std::max<std::size_t>(jobs, 1)));
}

// --- oracle ----------------------------------------------------------------

// Perfect matching test on a small member mask.
bool mask_matchable(uint32_t members, const std::vector<uint32_t>& open) {
  if (members == 0) return true;
  int low = std::countr_zero(members);
  uint32_t rest = members & (members - 1);
  uint32_t options = open[static_cast<std::size_t>(low)] & rest;
  while (options != 0) {
    int partner = std::countr_zero(options);
    options &= options - 1;
    if (mask_matchable(rest & ~(uint32_t{1} << partner), open)) return true;
  }
  return false;
}

class OracleSearch {
 public:
  OracleSearch(const TorusGraph& g, DominationKind kind) : kind_(kind), order_(g.order()) {
    full_ = order_ == 32 ? ~uint32_t{0} : (uint32_t{1} << order_) - 1;
    open_.resize(static_cast<std::size_t>(order_));
    for (int s = 0; s < order_; ++s) {
      for (int t : g.neighbor_slots(s)) open_[static_cast<std::size_t>(s)] |= uint32_t{1} << t;
    }
    reach_ = kind == DominationKind::Total ? 4 : 5;
  }

  // Least index list of size k that contains slot 0, or nullopt.
  std::optional<uint32_t> first_of_size(int k) {
    k_ = k;
    found_.reset();
    const uint32_t chosen = 1u;
    descend(1, chosen, open_[0], open_[0] | 1u, 1);
    return found_;
  }

 private:
  bool accept(uint32_t chosen, uint32_t open_cover, uint32_t closed_cover) const {
    switch (kind_) {
      case DominationKind::Total: return open_cover == full_;
      case DominationKind::Plain: return closed_cover == full_;
      case DominationKind::Paired: return closed_cover == full_ && mask_matchable(chosen, open_);
      default: return false;
    }
  }

  bool descend(int next, uint32_t chosen, uint32_t open_cover, uint32_t closed_cover, int picked) {
    if (picked == k_) {
      if (accept(chosen, open_cover, closed_cover)) {
        found_ = chosen;
        return true;
      }
      return false;
    }
    const uint32_t cover = kind_ == DominationKind::Total ? open_cover : closed_cover;
    const int missing = std::popcount(full_ & ~cover);
    if (missing > (k_ - picked) * reach_) return false;
    for (int s = next; s <= order_ - (k_ - picked); ++s) {
      const uint32_t bit = uint32_t{1} << s;
      const uint32_t o = open_cover | open_[static_cast<std::size_t>(s)];
      if (descend(s + 1, chosen | bit, o, closed_cover | open_[static_cast<std::size_t>(s)] | bit, picked + 1)) {
        return true;
      }
    }
    return false;
  }

  DominationKind kind_;
  int order_;
  uint32_t full_ = 0;
  int reach_ = 4;
  int k_ = 0;
  std::vector<uint32_t> open_;
  std::optional<uint32_t> found_;
};

// --- profile DP ------------------------------------------------------------

enum class ProfileMode { Plain, Total, Paired };

// Column c of the DP holds H vertices; bit r is the r-th vertex of the
// column, and columns c-1, c, c+1 are consecutive on the long cycle.
struct ProfileProblem {
  int height = 0;
  int columns = 0;
  ProfileMode mode = ProfileMode::Total;
  std::vector<uint32_t> forced_in;   // per column; empty means no constraints
  std::vector<uint32_t> forced_out;
  bool use_symmetry = true;
};

struct Seed {
  uint32_t first = 0;     // membership of column 0
  uint32_t behind = 0;    // column-0 vertices left to column N-1
  uint32_t backward = 0;  // paired: column-0 members matched into column N-1
  uint32_t pending = 0;   // paired: column-0 members matched into column 1
};

struct ProfileSolution {
  int cost = 0;
  std::vector<uint32_t> columns;
};

class ProfileSolver {
 public:
  explicit ProfileSolver(ProfileProblem problem) : p_(std::move(problem)) {
    const int h = p_.height;
    full_ = (uint32_t{1} << h) - 1;
    in_column_.resize(std::size_t{1} << h);
    for (uint32_t t = 0; t <= full_; ++t) {
      uint32_t up = ((t << 1) | (t >> (h - 1))) & full_;
      uint32_t down = ((t >> 1) | (t << (h - 1))) & full_;
      in_column_[t] = up | down;
    }
    if (p_.mode == ProfileMode::Paired) {
      matchable_.assign(std::size_t{1} << h, 0);
      matchable_[0] = 1;
      for (uint32_t y = 1; y <= full_; ++y) {
        int low = std::countr_zero(y);
        uint32_t rest = y & ~(uint32_t{1} << low);
        for (int nb : {(low + 1) % h, (low + h - 1) % h}) {
          uint32_t bit = uint32_t{1} << nb;
          if ((rest & bit) && matchable_[rest & ~bit]) matchable_[y] = 1;
        }
      }
      leftovers_.resize(std::size_t{1} << h);
      for (uint32_t x = 0; x <= full_; ++x) {
        for (uint32_t l = x;; l = (l - 1) & x) {
          if (matchable_[x & ~l]) leftovers_[x].push_back(l);
          if (l == 0) break;
        }
        std::sort(leftovers_[x].begin(), leftovers_[x].end());
      }
    }
    key_bits_ = p_.mode == ProfileMode::Paired ? 3 * h : 2 * h;
    reach_ = p_.mode == ProfileMode::Total ? 4 : 5;
  }

  std::vector<Seed> seeds() const {
    std::vector<Seed> out;
    for (uint32_t a = 0; a <= full_; ++a) {
      if (!fits(0, a)) continue;
      if (p_.use_symmetry && !dihedral_canonical(a)) continue;
      if (p_.mode == ProfileMode::Paired) {
        const uint32_t needs = full_ & ~(a | in_column_[a]);
        for (uint32_t q : submasks_ascending(a)) {
          for (uint32_t pend : leftovers_[a & ~q]) {
            for (uint32_t r : submasks_ascending(needs)) out.push_back({a, r, q, pend});
          }
        }
      } else {
        const uint32_t needs = first_column_needs(a);
        for (uint32_t r : submasks_ascending(needs)) out.push_back({a, r, 0, 0});
      }
    }
    return out;
  }

  // Best completion of `seed` with cost <= *bound; the bound is re-read
  // between layers so concurrent workers tighten each other.
  std::optional<ProfileSolution> run(const Seed& seed, const std::atomic<int>& bound) {
    const int n = p_.columns;
    const std::size_t keys = std::size_t{1} << key_bits_;
    if (cost_.size() != keys) {
      cost_.assign(keys, 0);
      stamp_.assign(keys, 0);
      pred_.assign(static_cast<std::size_t>(n) * keys, 0);
    }
    seed_ = seed;
    first_load_ = std::popcount(seed.first);

    std::vector<uint32_t> layer;
    const uint32_t start_needs =
        (p_.mode == ProfileMode::Paired ? full_ & ~(seed.first | in_column_[seed.first])
                                        : first_column_needs(seed.first)) &
        ~seed.behind;
    layer.push_back(key(seed.first, start_needs, seed.pending));
    std::vector<int> layer_cost{first_load_};

    for (int c = 1; c <= n - 2; ++c) {
      ++generation_;
      std::vector<uint32_t> next;
      const int limit = bound.load(std::memory_order_relaxed);
      for (std::size_t idx = 0; idx < layer.size(); ++idx) {
        const uint32_t from = layer[idx];
        const int base_cost = layer_cost[idx];
        expand(c, from, base_cost, limit, next);
      }
      if (next.empty()) return std::nullopt;
      layer_cost.resize(next.size());
      for (std::size_t idx = 0; idx < next.size(); ++idx) layer_cost[idx] = cost_[next[idx]];
      layer = std::move(next);
    }

    // Closing column N-1.
    const int limit = bound.load(std::memory_order_relaxed);
    int best_cost = std::numeric_limits<int>::max();
    uint32_t best_key = 0;
    uint32_t best_last = 0;
    for (std::size_t idx = 0; idx < layer.size(); ++idx) {
      const uint32_t from = layer[idx];
      const uint32_t s = from & full_;
      const uint32_t u = (from >> p_.height) & full_;
      const uint32_t pend = p_.mode == ProfileMode::Paired ? (from >> (2 * p_.height)) & full_ : 0;
      if (seed.backward & pend) continue;
      uint32_t req = u | seed.behind | pend | seed.backward | forced_in(n - 1);
      const uint32_t forb = forced_out(n - 1);
      if (req & forb) continue;
      const uint32_t free = full_ & ~req & ~forb;
      for (uint32_t sub = free;; sub = (sub - 1) & free) {
        const uint32_t t = req | sub;
        const int total = layer_cost[idx] + std::popcount(t);
        if (total <= limit && (!p_.use_symmetry || std::popcount(t) >= first_load_) && closes(s, pend, t)) {
          if (total < best_cost || (total == best_cost && (from < best_key || (from == best_key && t < best_last)))) {
            best_cost = total;
            best_key = from;
            best_last = t;
          }
        }
        if (sub == 0) break;
      }
    }
    if (best_cost == std::numeric_limits<int>::max()) return std::nullopt;

    ProfileSolution sol{best_cost, std::vector<uint32_t>(static_cast<std::size_t>(n), 0)};
    sol.columns[static_cast<std::size_t>(n - 1)] = best_last;
    uint32_t k = best_key;
    for (int c = n - 2; c >= 1; --c) {
      sol.columns[static_cast<std::size_t>(c)] = k & full_;
      k = pred_[static_cast<std::size_t>(c) * keys + k];
    }
    sol.columns[0] = seed.first;
    return sol;
  }

 private:
  uint32_t key(uint32_t s, uint32_t u, uint32_t pend) const {
    return s | (u << p_.height) | (pend << (2 * p_.height));
  }

  uint32_t forced_in(int c) const { return p_.forced_in.empty() ? 0 : p_.forced_in[static_cast<std::size_t>(c)]; }
  uint32_t forced_out(int c) const { return p_.forced_out.empty() ? 0 : p_.forced_out[static_cast<std::size_t>(c)]; }
  bool fits(int c, uint32_t t) const { return (t & forced_in(c)) == forced_in(c) && (t & forced_out(c)) == 0; }

  uint32_t first_column_needs(uint32_t a) const {
    return p_.mode == ProfileMode::Total ? full_ & ~in_column_[a] : full_ & ~(a | in_column_[a]);
  }

  static std::vector<uint32_t> submasks_ascending(uint32_t mask) {
    std::vector<uint32_t> out;
    for (uint32_t s = mask;; s = (s - 1) & mask) {
      out.push_back(s);
      if (s == 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool dihedral_canonical(uint32_t a) const {
    const int h = p_.height;
    for (int shift = 0; shift < h; ++shift) {
      uint32_t rot = ((a << shift) | (a >> (h - shift))) & full_;
      if (shift == 0) rot = a;
      if (rot < a) return false;
      uint32_t mirrored = 0;
      for (int r = 0; r < h; ++r) {
        if ((rot >> r) & 1u) mirrored |= uint32_t{1} << (h - 1 - r);
      }
      if (mirrored < a) return false;
    }
    return true;
  }

  // Admissible estimate of the members still to place after column c.
  int lower_bound(int c, uint32_t s, uint32_t u, uint32_t pend) const {
    const int later = p_.columns - 1 - c;
    int need = std::popcount(u) + std::popcount(seed_.behind) + later * p_.height - std::popcount(s) - first_load_;
    int lb = need > 0 ? (need + reach_ - 1) / reach_ : 0;
    lb = std::max(lb, std::popcount(pend));
    if (p_.use_symmetry) lb = std::max(lb, later * first_load_);
    return lb;
  }

  void relax(int c, uint32_t to, uint32_t from, int cost, std::vector<uint32_t>& next) {
    const std::size_t keys = std::size_t{1} << key_bits_;
    uint32_t& pred = pred_[static_cast<std::size_t>(c) * keys + to];
    if (stamp_[to] != generation_) {
      stamp_[to] = generation_;
      cost_[to] = cost;
      pred = from;
      next.push_back(to);
    } else if (cost < cost_[to] || (cost == cost_[to] && from < pred)) {
      cost_[to] = cost;
      pred = from;
    }
  }

  void expand(int c, uint32_t from, int base_cost, int limit, std::vector<uint32_t>& next) {
    const uint32_t s = from & full_;
    const uint32_t u = (from >> p_.height) & full_;
    const uint32_t pend = p_.mode == ProfileMode::Paired ? (from >> (2 * p_.height)) & full_ : 0;
    const uint32_t req = u | pend | forced_in(c);
    const uint32_t forb = forced_out(c) | (c == 1 ? seed_.behind : 0);
    if (req & forb) return;
    const uint32_t free = full_ & ~req & ~forb;
    for (uint32_t sub = free;; sub = (sub - 1) & free) {
      const uint32_t t = req | sub;
      const int load = std::popcount(t);
      if (!p_.use_symmetry || load >= first_load_) {
        const int cost = base_cost + load;
        switch (p_.mode) {
          case ProfileMode::Total: {
            const uint32_t nu = full_ & ~(s | in_column_[t]);
            if (cost + lower_bound(c, t, nu, 0) <= limit) relax(c, key(t, nu, 0), from, cost, next);
            break;
          }
          case ProfileMode::Plain: {
            const uint32_t nu = full_ & ~(s | t | in_column_[t]);
            if (cost + lower_bound(c, t, nu, 0) <= limit) relax(c, key(t, nu, 0), from, cost, next);
            break;
          }
          case ProfileMode::Paired: {
            const uint32_t nu = full_ & ~(s | t | in_column_[t]);
            for (uint32_t l : leftovers_[t & ~pend]) {
              if (cost + lower_bound(c, t, nu, l) <= limit) relax(c, key(t, nu, l), from, cost, next);
            }
            break;
          }
        }
      }
      if (sub == 0) break;
    }
  }

  bool closes(uint32_t s, uint32_t pend, uint32_t t) const {
    switch (p_.mode) {
      case ProfileMode::Total: return (full_ & ~(s | in_column_[t]) & ~seed_.first) == 0;
      case ProfileMode::Plain: return (full_ & ~(s | t | in_column_[t]) & ~seed_.first) == 0;
      case ProfileMode::Paired:
        if ((full_ & ~(s | t | in_column_[t]) & ~seed_.first) != 0) return false;
        return matchable_[t & ~pend & ~seed_.backward] != 0;
    }
    return false;
  }

  ProfileProblem p_;
  uint32_t full_ = 0;
  int key_bits_ = 0;
  int reach_ = 4;
  std::vector<uint32_t> in_column_;
  std::vector<char> matchable_;
  std::vector<std::vector<uint32_t>> leftovers_;

  Seed seed_;
  int first_load_ = 0;
  uint32_t generation_ = 0;
  std::vector<int> cost_;
  std::vector<uint32_t> stamp_;
  std::vector<uint32_t> pred_;
};

struct SeedOutcome {
  int cost = std::numeric_limits<int>::max();
  std::size_t seed_index = std::numeric_limits<std::size_t>::max();
  std::vector<uint32_t> columns;
};

// Runs every seed; the winner is the least cost, then the least seed index,
// which makes the result independent of how seeds were scheduled.
std::optional<ProfileSolution> run_profile(const ProfileProblem& problem, int bound, const SolveOptions& options) {
  const std::vector<Seed> seeds = ProfileSolver(problem).seeds();
  std::atomic<std::size_t> next{0};
  std::atomic<int> shared_bound{bound};
  std::mutex merge;
  SeedOutcome best;

  auto work = [&] {
    ProfileSolver solver(problem);
    SeedOutcome local;
    for (std::size_t idx = next.fetch_add(1); idx < seeds.size(); idx = next.fetch_add(1)) {
      auto sol = solver.run(seeds[idx], shared_bound);
      if (!sol) continue;
      if (sol->cost < local.cost || (sol->cost == local.cost && idx < local.seed_index)) {
        local = {sol->cost, idx, std::move(sol->columns)};
      }
      int cur = shared_bound.load();
      while (local.cost < cur && !shared_bound.compare_exchange_weak(cur, local.cost)) {
      }
    }
    std::lock_guard<std::mutex> lock(merge);
    if (local.cost < best.cost || (local.cost == best.cost && local.seed_index < best.seed_index)) {
      best = std::move(local);
    }
  };

  const int workers = worker_count(options, seeds.size());
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (best.seed_index == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return ProfileSolution{best.cost, std::move(best.columns)};
}

// Maps between the original torus and the DP frame, where columns run along
// the longer cycle.
struct Frame {
  TorusDims dims;
  bool transposed = false;
  int height() const { return transposed ? dims.n : dims.m; }
  int columns() const { return transposed ? dims.m : dims.n; }

  std::pair<int, int> locate(int slot) const {
    const int i = slot / dims.m;
    const int j = slot % dims.m;
    return transposed ? std::pair{j, i} : std::pair{i, j};
  }

  VertexSet to_set(const std::vector<uint32_t>& cols) const {
    VertexSet out(dims);
    for (int c = 0; c < columns(); ++c) {
      for (int r = 0; r < height(); ++r) {
        if ((cols[static_cast<std::size_t>(c)] >> r) & 1u) {
          out.insert(transposed ? VertexId{r + 1, c + 1} : VertexId{c + 1, r + 1});
        }
      }
    }
    return out;
  }
};

Frame frame_for(int n, int m) { return {{n, m}, m > n}; }

int initial_bound(int n, int m, DominationKind kind) {
  auto report = upper_bounds(n, m, kind == DominationKind::Plain ? DominationKind::Total : kind);
  int bound = report.best_upper();
  if (report.exact) bound = std::min(bound, *report.exact);
  return std::min(bound, n * m);
}

std::vector<uint32_t> solve_frame(const Frame& frame, ProfileMode mode, int bound, const SolveOptions& options) {
  ProfileProblem problem{frame.height(), frame.columns(), mode, {}, {}, true};
  auto sol = run_profile(problem, bound, options);
  if (!sol) sol = run_profile(problem, frame.dims.order(), options);
  if (!sol) throw std::logic_error("profile DP found no dominating set");
  return sol->columns;
}

// Least optimum in slot order: decide slots one by one, keeping a slot when
// some optimum still contains it under the decisions so far.
std::vector<uint32_t> canonical_frame(const Frame& frame, ProfileMode mode, int optimum,
                                      std::vector<uint32_t> witness, const SolveOptions& options) {
  ProfileProblem problem{frame.height(), frame.columns(), mode,
                         std::vector<uint32_t>(static_cast<std::size_t>(frame.columns()), 0),
                         std::vector<uint32_t>(static_cast<std::size_t>(frame.columns()), 0), false};
  for (int slot = 0; slot < frame.dims.order(); ++slot) {
    auto [c, r] = frame.locate(slot);
    const uint32_t bit = uint32_t{1} << r;
    const auto col = static_cast<std::size_t>(c);
    if (witness[col] & bit) {
      problem.forced_in[col] |= bit;
      continue;
    }
    problem.forced_in[col] |= bit;
    auto sol = run_profile(problem, optimum, options);
    if (sol && sol->cost == optimum) {
      witness = std::move(sol->columns);
    } else {
      problem.forced_in[col] &= ~bit;
      problem.forced_out[col] |= bit;
    }
  }
  return witness;
}

void require_profile_height(const Frame& frame, int cap, const char* what) {
  if (frame.height() > cap) {
    throw Error(ErrorCode::InstanceTooLarge, std::string(what) + " needs min(n,m) <= " + std::to_string(cap) +
                                                 ", got " + dims_text(frame.dims.n, frame.dims.m));
  }
}

// --- paired branch and bound -----------------------------------------------

class PairedBranchAndBound {
 public:
  PairedBranchAndBound(const TorusGraph& g, VertexSet incumbent, std::int64_t budget)
      : g_(g),
        best_(std::move(incumbent)),
        current_(g.dims()),
        closed_(static_cast<std::size_t>(g.order()), 0),
        budget_(budget) {
    undominated_ = g.order();
  }

  VertexSet run(int root_lower) {
    if (best_.size() <= root_lower) return best_;
    descend();
    return best_;
  }

 private:
  void place(int s, int delta) {
    auto touch = [&](int x) {
      int& c = closed_[static_cast<std::size_t>(x)];
      if (c == 0 && delta > 0) --undominated_;
      c += delta;
      if (c == 0) ++undominated_;
    };
    touch(s);
    for (int t : g_.neighbor_slots(s)) touch(t);
    if (delta > 0) {
      current_.set(s);
    } else {
      current_.reset(s);
    }
  }

  void descend() {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::InstanceTooLarge,
                  "paired branch and bound exceeded its node budget on " + dims_text(g_.n(), g_.m()));
    }
    if (undominated_ == 0) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    // Two adjacent new members dominate at most 8 new vertices.
    const int lb = 2 * ((undominated_ + 7) / 8);
    if (current_.size() + lb >= best_.size()) return;

    int target = 0;
    while (closed_[static_cast<std::size_t>(target)] != 0) ++target;
    std::vector<std::pair<int, int>> edges;
    auto consider = [&](int x) {
      if (current_.test(x)) return;
      for (int y : g_.neighbor_slots(x)) {
        if (current_.test(y)) continue;
        edges.emplace_back(std::min(x, y), std::max(x, y));
      }
    };
    consider(target);
    for (int x : g_.neighbor_slots(target)) consider(x);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [x, y] : edges) {
      place(x, +1);
      place(y, +1);
      descend();
      place(y, -1);
      place(x, -1);
      if (current_.size() + lb >= best_.size()) return;
    }
  }

  const TorusGraph& g_;
  VertexSet best_;
  VertexSet current_;
  std::vector<int> closed_;
  int undominated_ = 0;
  std::int64_t nodes_ = 0;
  std::int64_t budget_;
};

}  // namespace

SolveResult solve_oracle(int n, int m, DominationKind kind, const SolveOptions&) {
  const auto start = Clock::now();
  check_dims({n, m});
  if (n * m > kOracleMaxOrder) {
    throw Error(ErrorCode::InstanceTooLarge, "oracle needs n*m <= " + std::to_string(kOracleMaxOrder) + ", got " +
                                                 dims_text(n, m));
  }
  if (kind == DominationKind::EfficientTotal) {
    throw Error(ErrorCode::InvalidArgument, "oracle solves plain, total and paired domination");
  }
  TorusGraph g({n, m});
  OracleSearch search(g, kind);
  // Vertex transitivity: some optimum contains slot 0, and any set with slot 0
  // precedes every set without it, so the first hit is the least optimum.
  for (int k = 1; k <= g.order(); ++k) {
    if (kind == DominationKind::Paired && k % 2 != 0) continue;
    if (auto mask = search.first_of_size(k)) {
      VertexSet cert(g.dims());
      for (int s = 0; s < g.order(); ++s) {
        if ((*mask >> s) & 1u) cert.set(s);
      }
      return finish(std::move(cert), kind, SolveMethod::Oracle, start);
    }
  }
  throw std::logic_error("oracle found no dominating set");
}

SolveResult solve_profile_dp(int n, int m, DominationKind kind, const SolveOptions& options) {
  const auto start = Clock::now();
  check_dims({n, m});
  if (kind != DominationKind::Plain && kind != DominationKind::Total) {
    throw Error(ErrorCode::InvalidArgument, "profile DP solves plain and total domination; use solve_paired");
  }
  const Frame frame = frame_for(n, m);
  require_profile_height(frame, kProfileMaxHeight, "profile DP");
  const ProfileMode mode = kind == DominationKind::Total ? ProfileMode::Total : ProfileMode::Plain;
  auto cols = solve_frame(frame, mode, initial_bound(n, m, kind), options);
  if (options.canonical) {
    const int optimum = frame.to_set(cols).size();
    cols = canonical_frame(frame, mode, optimum, std::move(cols), options);
  }
  return finish(frame.to_set(cols), kind, SolveMethod::ProfileDP, start);
}

SolveResult solve_paired(int n, int m, const SolveOptions& options) {
  const auto start = Clock::now();
  check_dims({n, m});
  const Frame frame = frame_for(n, m);
  if (frame.height() <= kPairedProfileMaxHeight) {
    auto cols = solve_frame(frame, ProfileMode::Paired, initial_bound(n, m, DominationKind::Paired), options);
    if (options.canonical) {
      const int optimum = frame.to_set(cols).size();
      cols = canonical_frame(frame, ProfileMode::Paired, optimum, std::move(cols), options);
    }
    return finish(frame.to_set(cols), DominationKind::Paired, SolveMethod::ProfileDP, start);
  }
  if (options.canonical) {
    throw Error(ErrorCode::InstanceTooLarge, "canonical paired certificates need min(n,m) <= " +
                                                 std::to_string(kPairedProfileMaxHeight));
  }
  TorusGraph g({n, m});
  VertexSet incumbent = best_construction(n, m, DominationKind::Paired).set;
  int lower = lower_bound_regular(n, m);
  lower += lower % 2;
  PairedBranchAndBound search(g, std::move(incumbent), options.node_budget);
  return finish(search.run(lower), DominationKind::Paired, SolveMethod::PairedSearch, start);
}

SolveResult solve(int n, int m, DominationKind kind, const SolveOptions& options) {
  check_dims({n, m});
  if (n * m <= 20) return solve_oracle(n, m, kind, options);
  if (kind == DominationKind::Paired) return solve_paired(n, m, options);
  return solve_profile_dp(n, m, kind, options);
}

std::optional<VertexSet> find_efficient_tds(int n, int m) {
  check_dims({n, m});
  // Multiplicity one everywhere forces |D| = nm/4 with D perfectly matched.
  if ((n * m) % 8 != 0) return std::nullopt;
  const Frame frame = frame_for(n, m);
  require_profile_height(frame, kEfficientMaxHeight, "efficient set search");
  const int h = frame.height();
  const int cols = frame.columns();
  const uint32_t full = (uint32_t{1} << h) - 1;
  auto up = [&](uint32_t t) { return ((t << 1) | (t >> (h - 1))) & full; };
  auto down = [&](uint32_t t) { return ((t >> 1) | (t << (h - 1))) & full; };
  auto exactly_one = [&](uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    const uint32_t odd = a ^ b ^ c ^ d;
    const uint32_t two = (a & b) | (a & c) | (a & d) | (b & c) | (b & d) | (c & d);
    return (odd & ~two & full) == full;
  };

  std::vector<uint32_t> s(static_cast<std::size_t>(cols), 0);
  for (uint32_t s0 = 0; s0 <= full; ++s0) {
    for (uint32_t s1 = 0; s1 <= full; ++s1) {
      s[0] = s0;
      s[1] = s1;
      bool alive = true;
      // Column c-1 has its count fixed except for the same-rung vertex of
      // column c, which must fill exactly the zeros.
      for (int c = 2; c < cols && alive; ++c) {
        const uint32_t x = s[static_cast<std::size_t>(c - 2)];
        const uint32_t y = up(s[static_cast<std::size_t>(c - 1)]);
        const uint32_t z = down(s[static_cast<std::size_t>(c - 1)]);
        if ((x & y) | (x & z) | (y & z)) {
          alive = false;
          break;
        }
        s[static_cast<std::size_t>(c)] = full & ~(x | y | z);
      }
      if (!alive) continue;
      const auto last = static_cast<std::size_t>(cols - 1);
      if (!exactly_one(s[last - 1], up(s[last]), down(s[last]), s0)) continue;
      if (!exactly_one(s[last], up(s0), down(s0), s1)) continue;
      VertexSet out = frame.to_set(s);
      TorusGraph g({n, m});
      if (!is_efficient_total(g, out)) throw std::logic_error("forced column search produced a non-efficient set");
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace torusdom
