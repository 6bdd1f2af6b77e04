// Exact polyhedral kernel: vertex enumeration, cone conversions between
// generator and inequality form, Fourier-Motzkin projection, and pulling
// triangulations of pointed cones.
#pragma once

#include <optional>
#include <vector>

#include "alphapoly/lp.hpp"

namespace alphapoly {

// ---------------------------------------------------------------------------
// Bounded polyhedra given by constraints.

// All vertices of {x : constraints}, deduplicated and sorted
// lexicographically.  Works for feasible sets of any dimension (a vertex is a
// point whose tight constraints have full rank, so brute force over
// (dim)-subsets of rows is complete even for degenerate sets).
// Throws domain_error when the set is empty or unbounded.
std::vector<QVec> enumerate_vertices(const std::vector<LinConstraint>& h,
                                     int dim);

// Same, but an empty feasible set yields an empty list instead of a throw.
// Unbounded input still throws.
std::vector<QVec> enumerate_vertices_allow_empty(
    const std::vector<LinConstraint>& h, int dim);

// ---------------------------------------------------------------------------
// Fourier-Motzkin projection.

struct Projection {
  std::vector<LinConstraint> constraints;  // over the kept variables
  std::vector<int> kept;                   // original indices, ascending
};

// Eliminate the listed variables one at a time, pruning redundant rows with
// exact LPs after every elimination step.  The result describes the image of
// the feasible set under the coordinate projection onto the kept variables.
// An infeasible input surfaces as the single impossible row 0 <= -1.
Projection project_polyhedron(const std::vector<LinConstraint>& h, int dim,
                              const std::vector<int>& eliminate);

// ---------------------------------------------------------------------------
// Convex cones.

// {x : n . x >= 0 for n in ineqs, e . x == 0 for e in eqs}.
struct ConeHRep {
  int dim = 0;
  std::vector<QVec> ineqs;
  std::vector<QVec> eqs;
};

// Extreme rays plus a lineality basis; rays/lineality vectors are primitive
// integer and sorted.  A pointed cone has empty lineality; the zero cone has
// both lists empty.
struct ConeVRep {
  std::vector<QVec> rays;
  std::vector<QVec> lineality;
};

ConeVRep cone_generators(const ConeHRep& h);

// Inequality description of the cone spanned by the given generators
// (lineality may be encoded as +/- generator pairs).  The inequalities cut
// the cone out of its linear span; eqs pin down that span.
ConeHRep cone_facets(int dim, const std::vector<QVec>& generators);

bool cone_contains(const ConeHRep& h, const QVec& x);

// Dimension of the cone described by v (rank of rays plus lineality).
int cone_dim(const ConeVRep& v, int dim);

// Pulling triangulation of a pointed cone given by its extreme rays: sorted
// list of simplicial generator sets, each of size dim(cone), whose union is
// the cone.  Faces are triangulated consistently, so triangulating the cones
// of a fan yields a fan.
std::vector<std::vector<QVec>> triangulate_cone(
    int dim, const std::vector<QVec>& extreme_rays);

}  // namespace alphapoly
