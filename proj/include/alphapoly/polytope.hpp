// Lattice polytopes in both descriptions, normal/support fans, lattice point
// enumeration, subspace slices, and polytope erosion.
#pragma once

#include <optional>
#include <vector>

#include "alphapoly/polyhedra.hpp"

namespace alphapoly {

// One inequality  constant + normal . y >= 0  with a primitive integer
// normal (the constant carries the scaling).
struct Facet {
  Rat constant;
  QVec normal;
};

// Intersection of facet half-spaces in document order.
struct HPolytope {
  int rank = 0;
  std::vector<Facet> facets;
};

// Convex hull of vertices, stored sorted lexicographically.
struct VPolytope {
  int rank = 0;
  std::vector<QVec> vertices;
};

// Cone spanned by generators (primitive integer, sorted); lineality may be
// present as +/- pairs.
struct Cone {
  int rank = 0;
  std::vector<QVec> generators;
};

// Finite cone collection; for the fans built here the maximal cones cover
// the intended support and intersect in common faces.
struct Fan {
  int rank = 0;
  std::vector<Cone> cones;
};

// Rescale (constant, normal) so the normal becomes primitive integer.
Facet canonical_facet(const Rat& constant, const QVec& normal);
HPolytope make_hpolytope(int rank, const std::vector<Facet>& facets);

// Facet value  constant + normal . y  of facet a (0-based) at y.
Rat facet_value(const HPolytope& p, int a, const QVec& y);

bool hull_membership(const QVec& y, const HPolytope& p);
bool is_empty(const HPolytope& p);

// Conversions between the two descriptions.  Both require a bounded solid
// input and throw domain_error otherwise; facet output is irredundant and
// sorted by (normal, constant).
VPolytope dual_description(const HPolytope& p);
HPolytope dual_description(const VPolytope& v);

// max over vertices of  x . v  (the support function of the hull).
Rat support_value(const VPolytope& v, const QVec& x);

// All lattice points of m*P, sorted lexicographically.  m >= 1.
std::vector<QVec> lattice_points(const HPolytope& p, long m);

// Inner normal fan: for each vertex (in sorted vertex order) the cone spanned
// by the normals of the facets active there, reduced to extreme rays.
Fan normal_fan(const HPolytope& p);
std::vector<std::pair<QVec, Cone>> normal_fan_cells(const HPolytope& p);

// Outer max-attainment fan of a vertex set: the cone attached to vertex q is
// {x : x.(q - q') >= 0 for all other vertices q'}; on it the support function
// equals x . q.  Cones may carry lineality when the hull is not solid.
Fan support_fan(const VPolytope& v);
std::vector<ConeHRep> support_regions(const VPolytope& v);

// P cut by the linear subspace spanned by basis_vectors (ambient vectors).
// span_vertices are the vertices in subspace coordinates, ambient_vertices
// their images; both sorted by the ambient order.  An empty basis yields the
// origin when 0 lies in P and the empty slice otherwise.
struct Slice {
  std::vector<QVec> basis;
  std::vector<QVec> span_vertices;
  std::vector<QVec> ambient_vertices;
};
Slice slice_by_subspace(const HPolytope& p,
                        const std::vector<QVec>& basis_vectors);

// Per-facet erosion of q by the hull h: each constant shrinks by
// max over h of (-normal . point) (the result can be empty).  Normals are
// unchanged, so facet indices keep their meaning.
HPolytope erode(const HPolytope& q, const VPolytope& h);

}  // namespace alphapoly
