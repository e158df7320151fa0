#include "torusdom/validate.hpp"

#include <algorithm>
#include <stdexcept>

#include "torusdom/error.hpp"
#include "torusdom/matching.hpp"

namespace torusdom {

const char* to_string(DominationKind kind) {
  switch (kind) {
    case DominationKind::Plain: return "plain";
    case DominationKind::Total: return "total";
    case DominationKind::Paired: return "paired";
    case DominationKind::EfficientTotal: return "efficient";
  }
  return "unknown";
}

std::optional<DominationKind> parse_kind(std::string_view text) {
  if (text == "plain") return DominationKind::Plain;
  if (text == "total") return DominationKind::Total;
  if (text == "paired") return DominationKind::Paired;
  if (text == "efficient") return DominationKind::EfficientTotal;
  return std::nullopt;
}

const char* to_string(AuditStatus status) {
  switch (status) {
    case AuditStatus::Holds: return "holds";
    case AuditStatus::Fails: return "fails";
    case AuditStatus::NotApplicable: return "n/a";
  }
  return "unknown";
}

namespace {

void require_same_torus(const TorusGraph& g, const VertexSet& d) {
  if (!(g.dims() == d.dims())) {
    throw Error(ErrorCode::InvalidArgument, "vertex set does not belong to this torus");
  }
}

}  // namespace

std::vector<int> domination_multiplicity(const TorusGraph& g, const VertexSet& d) {
  require_same_torus(g, d);
  std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
  for (int s : d.slots()) {
    for (int t : g.neighbor_slots(s)) ++count[static_cast<std::size_t>(t)];
  }
  return count;
}

bool is_dominating(const TorusGraph& g, const VertexSet& d) {
  auto count = domination_multiplicity(g, d);
  for (int s = 0; s < g.order(); ++s) {
    if (!d.test(s) && count[static_cast<std::size_t>(s)] == 0) return false;
  }
  return true;
}

bool is_total_dominating(const TorusGraph& g, const VertexSet& d) {
  for (int c : domination_multiplicity(g, d)) {
    if (c == 0) return false;
  }
  return true;
}

std::optional<MatchingWitness> has_perfect_matching(const TorusGraph& g, const VertexSet& d) {
  require_same_torus(g, d);
  const auto members = d.slots();
  if (members.size() % 2 != 0) return std::nullopt;

  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t k = 0; k < members.size(); ++k) local[static_cast<std::size_t>(members[k])] = static_cast<int>(k);

  BlossomMatcher matcher(static_cast<int>(members.size()));
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (int t : g.neighbor_slots(members[k])) {
      int other = local[static_cast<std::size_t>(t)];
      if (other > static_cast<int>(k)) matcher.add_edge(static_cast<int>(k), other);
    }
  }
  if (2 * matcher.maximize() != static_cast<int>(members.size())) return std::nullopt;

  MatchingWitness witness;
  for (std::size_t k = 0; k < members.size(); ++k) {
    int other = matcher.mate(static_cast<int>(k));
    if (other > static_cast<int>(k)) {
      witness.pairs.emplace_back(g.vertex(members[k]), g.vertex(members[static_cast<std::size_t>(other)]));
    }
  }
  return witness;
}

bool is_paired_dominating(const TorusGraph& g, const VertexSet& d) {
  return is_dominating(g, d) && has_perfect_matching(g, d).has_value();
}

bool is_efficient_total(const TorusGraph& g, const VertexSet& d) {
  auto count = domination_multiplicity(g, d);
  for (int c : count) {
    if (c != 1) return false;
  }

  // Consequences that must follow from multiplicity one everywhere.
  if (d.size() % 2 != 0) throw std::logic_error("efficient total dominating set of odd size");
  for (int s : d.slots()) {
    int partners = 0;
    for (int t : g.neighbor_slots(s)) partners += d.test(t) ? 1 : 0;
    if (partners != 1) throw std::logic_error("induced subgraph of an efficient set is not a perfect matching");
  }
  std::vector<int> covered(static_cast<std::size_t>(g.order()), 0);
  for (int s : d.slots()) {
    for (int t : g.neighbor_slots(s)) ++covered[static_cast<std::size_t>(t)];
  }
  for (int c : covered) {
    if (c != 1) throw std::logic_error("member neighbourhoods do not partition the vertex set");
  }
  return true;
}

bool validates(const TorusGraph& g, const VertexSet& d, DominationKind kind) {
  switch (kind) {
    case DominationKind::Plain: return is_dominating(g, d);
    case DominationKind::Total: return is_total_dominating(g, d);
    case DominationKind::Paired: return is_paired_dominating(g, d);
    case DominationKind::EfficientTotal: return is_efficient_total(g, d);
  }
  return false;
}

ColumnProfile column_profile(const TorusGraph& g, const VertexSet& d) {
  require_same_torus(g, d);
  ColumnProfile profile;
  profile.alpha.assign(static_cast<std::size_t>(g.m()) + 1, 0);
  for (int i = 1; i <= g.n(); ++i) {
    int load = d.column_load(i);
    ++profile.alpha[static_cast<std::size_t>(load)];
    profile.max_load = std::max(profile.max_load, load);
  }
  if (g.m() != 3 || profile.max_load > 2) return profile;

  const int n = g.n();
  const int a0 = profile.count(0);
  const int a1 = profile.count(1);
  const int a2 = profile.count(2);
  auto verdict = [](bool ok) { return ok ? AuditStatus::Holds : AuditStatus::Fails; };
  profile.column_count = verdict(a0 + a1 + a2 == n);
  profile.pair_surplus = verdict(2 * a2 - a0 >= 0);
  profile.coverage = verdict(4 * a1 + 7 * a2 >= 3 * n);
  return profile;
}

}  // namespace torusdom
