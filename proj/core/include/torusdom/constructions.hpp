#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusdom/torus.hpp"
#include "torusdom/validate.hpp"

namespace torusdom {

/// An explicit dominating set. Every producer validates `set` under `kind`
/// before returning, and |set| == claimed_cardinality.
struct ConstructionResult {
  VertexSet set;
  int claimed_cardinality = 0;
  DominationKind kind = DominationKind::Paired;
  std::string provenance;
  /// Upper bound the family promises; claimed_cardinality never exceeds it.
  int promised_bound = 0;

  ConstructionResult transposed() const;
};

/// {x_ij, x_i(j+1), x_(i+2)(j+2), x_(i+2)(j+3) : i, j = 1 (mod 4)}; needs
/// n, m = 0 (mod 4). Paired, size nm/4, every multiplicity exactly 1.
ConstructionResult construct_mod4(int n, int m);

/// Period-5 pattern on G_{n,3} for kind Total or Paired, with the end
/// patches that make it exact for every n >= 3.
ConstructionResult construct_m3(int n, DominationKind kind);

/// Block pattern on G_{n,4}; paired and exact for every n >= 3.
ConstructionResult construct_m4(int n);

/// Base block pattern of the large-torus families, restricted to
/// 1 <= i <= n-2 and 1 <= j <= m-2 (indices wrap). Needs n, m >= 5.
VertexSet construct_De(int n, int m);

/// The residue-class family witness for rings n, rungs m exactly as
/// oriented (no transposition), or nullopt when (n mod 4, m mod 4) has no
/// dedicated family. Needs n, m >= 5 and kind Total or Paired.
std::optional<ConstructionResult> construct_residue_class(int n, int m, DominationKind kind);

/// Best witness among the residue-class families and the rounded-up block
/// projection, trying both orientations. Needs n, m >= 5 and kind Total or
/// Paired.
ConstructionResult construct_large(int n, int m, DominationKind kind);

/// Whatever family covers (n, m, kind): m3, m4, mod4 or construct_large.
/// Throws UnsupportedClass for Plain and EfficientTotal.
ConstructionResult best_construction(int n, int m, DominationKind kind);

struct NormalizeResult {
  VertexSet set;
  int operations = 0;
  /// True when some rewrite re-added a vertex already present.
  bool shrank = false;
};

/// Rewrites every full column Y_i of a total dominating set of G_{n,3} as
/// (D \ {x_i1, x_i3}) u {x_(i-1)2, x_(i+1)2}, in increasing i, to a fixpoint.
NormalizeResult normalize_columns_m3(const TorusGraph& g, const VertexSet& d);

struct ProjectionReport {
  /// Rungs j with x_(n+1)j in d, and with x_nj in d.
  std::vector<int> a_rungs;
  std::vector<int> b_rungs;
  /// Odd components of the induced subgraph of the plain projection.
  int odd_components = 0;
  /// Vertices the paired repair added on top of the plain projection.
  VertexSet repair_vertices;
  /// Repair was done on the ring-reflected input.
  bool mirrored = false;
};

struct Projection {
  VertexSet set;
  ProjectionReport report;
};

/// Maps a total (kind Total) or paired (kind Paired) dominating set of
/// G_{n+1,m} onto G_{n,m} without growing it:
///   D' = (D \ Y_{n+1}) u {x_(n-1)j : j in A n B} u {x_nj : j in A \ B}.
/// Paired inputs additionally get their odd components repaired.
Projection project_column(const TorusGraph& big, const VertexSet& d, DominationKind kind);

}  // namespace torusdom
