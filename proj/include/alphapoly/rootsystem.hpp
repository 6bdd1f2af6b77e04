// Crystallographic root systems embedded in a fixed lattice: named factors
// (A/B/C/D/G2 blocks) or explicit validated root lists, Weyl orbits, dominant
// lattice points, and the Weyl dimension formula.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alphapoly/polytope.hpp"

namespace alphapoly {

// A positive root together with its coroot 2a/(a,a).  Roots live on the
// weight side (they pair with primal vectors); coroots pair with weights.
struct Root {
  QVec alpha;
  QVec coroot;
};

struct RootFactor {
  std::string type;  // "A3", "B2", ..., "G2"
  int offset = 0;    // first ambient coordinate of the block
};

struct RootData {
  int rank = 0;
  std::vector<Root> positive;       // closed system of positive roots
  std::vector<int> simple;          // indices into positive
  QVec rho;                         // half sum of positive roots
  QVec two_rho;
  std::vector<QVec> center_dual;    // basis of {y : <coroot, y> = 0 for all}
  std::vector<QVec> center_primal;  // basis of {x : <root, x> = 0 for all}
  Int weyl_order = 1;

  bool toric() const { return positive.empty(); }
};

// Named factors at coordinate offsets; coordinates outside every block are
// central.  Supported: An (block n+1), Bn/Cn (block n, n >= 2), Dn (block n,
// n >= 2), G2 (block 3).  Throws schema_error on overlap or bad names.
RootData build_root_data(int rank, const std::vector<RootFactor>& factors);

// Explicit positive roots.  Validates: nonzero, reduced, no +/- pairs,
// integral Cartan pairings, closure under the induced reflections, and that
// every root is a nonnegative integer combination of the indecomposable
// ones.  Throws schema_error otherwise.
RootData build_root_data(int rank, const std::vector<QVec>& positive_roots);

// Reflection through root a on the weight side: y - <coroot, y> alpha.
QVec reflect_weight(const Root& r, const QVec& y);
// The adjoint action on the primal side: x - <alpha, x> coroot.
QVec reflect_primal(const Root& r, const QVec& x);

// Orbit of y under the group generated by the simple reflections, sorted.
std::vector<QVec> weyl_orbit(const RootData& rd, const QVec& y);

// Convex hull of the union of orbits of the given weights (vertices only;
// the hull may be lower-dimensional).
VPolytope orbit_hull(const RootData& rd, const std::vector<QVec>& weights);

// Does each simple reflection permute the facet set of p?
bool is_w_invariant(const RootData& rd, const HPolytope& p);

bool is_dominant(const RootData& rd, const QVec& y);

// Dominant lattice points of m*P, sorted lexicographically.
std::vector<QVec> dominant_points(const RootData& rd, const HPolytope& p,
                                  long m);

// Weyl dimension formula at a dominant weight.
Int irrep_dimension(const RootData& rd, const QVec& lambda);

// Cone spanned by the simple roots on the weight side ({0} when toric).
Cone dual_positive_cone(const RootData& rd);

}  // namespace alphapoly
