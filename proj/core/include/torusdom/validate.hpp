#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "torusdom/torus.hpp"

namespace torusdom {

enum class DominationKind { Plain, Total, Paired, EfficientTotal };

const char* to_string(DominationKind kind);
/// Accepts "plain", "total", "paired", "efficient".
std::optional<DominationKind> parse_kind(std::string_view text);

/// A perfect matching of G[D]: disjoint edges of G[D] covering D.
struct MatchingWitness {
  std::vector<std::pair<VertexId, VertexId>> pairs;
};

/// Slot-indexed |N(v) ∩ d|, each value in [0..4].
std::vector<int> domination_multiplicity(const TorusGraph& g, const VertexSet& d);

/// Members need not have a neighbour in d.
bool is_dominating(const TorusGraph& g, const VertexSet& d);
bool is_total_dominating(const TorusGraph& g, const VertexSet& d);
std::optional<MatchingWitness> has_perfect_matching(const TorusGraph& g, const VertexSet& d);
bool is_paired_dominating(const TorusGraph& g, const VertexSet& d);
/// Every multiplicity is exactly 1. A positive verdict also re-derives the
/// structural consequences (induced edges form a perfect matching of d, |d|
/// even, member neighbourhoods partition V) and throws std::logic_error if
/// any of them fails.
bool is_efficient_total(const TorusGraph& g, const VertexSet& d);

bool validates(const TorusGraph& g, const VertexSet& d, DominationKind kind);

enum class AuditStatus { Holds, Fails, NotApplicable };
const char* to_string(AuditStatus status);

/// Per-column load statistics. alpha[k] counts rings i with |Y_i ∩ d| = k.
///
/// The three audits are the counting identities of minimum total dominating
/// sets of G_{n,3} whose columns hold at most two members:
///   column_count:   alpha0 + alpha1 + alpha2 = n
///   pair_surplus:   2*alpha2 - alpha0 >= 0
///   coverage:       4*alpha1 + 7*alpha2 >= 3n
/// They are NotApplicable unless m = 3 and every load is <= 2.
struct ColumnProfile {
  std::vector<int> alpha;
  AuditStatus column_count = AuditStatus::NotApplicable;
  AuditStatus pair_surplus = AuditStatus::NotApplicable;
  AuditStatus coverage = AuditStatus::NotApplicable;
  int max_load = 0;

  int count(int load) const {
    return load >= 0 && load < static_cast<int>(alpha.size()) ? alpha[static_cast<std::size_t>(load)] : 0;
  }
};

ColumnProfile column_profile(const TorusGraph& g, const VertexSet& d);

}  // namespace torusdom
