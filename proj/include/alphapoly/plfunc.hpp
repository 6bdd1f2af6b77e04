// Piecewise linear functions on fans: the curvature function of a divisor on
// the normal fan, support functions as PL data, and common refinements.
#pragma once

#include <vector>

#include "alphapoly/rootsystem.hpp"

namespace alphapoly {

// Linear functional per maximal cone; hreps cache the cone inequality
// descriptions used for point location.  Continuity across shared faces is a
// property of the construction, checkable with pl_is_continuous.
struct PLFunction {
  Fan fan;
  std::vector<QVec> functionals;
  std::vector<ConeHRep> hreps;
};

// One coefficient per facet of the carrying polytope, in facet order.
struct DivisorData {
  std::vector<Rat> coefficients;
};

// The PL function on the inner normal fan of p determined by a divisor: on
// the cone of vertex v it is the linear functional nu_v with
// nu_v(normal_a) = -coefficient_a for every facet a active at v.  Throws
// domain_error when the data is not linear on some cone.
PLFunction upsilon_from_divisor(const HPolytope& p, const DivisorData& d);

// Coefficients of the anticanonical divisor: per facet,
// 1 + sum over positive roots of |<alpha, normal>|.
DivisorData anticanonical_coeffs(const HPolytope& p, const RootData& rd);

// Evaluate at x; throws domain_error outside the fan support.
Rat pl_evaluate(const PLFunction& f, const QVec& x);

// Support function of a vertex set as a PL function on its max-attainment
// fan (only meaningful where that fan is full-dimensional).
PLFunction support_plfunction(const VPolytope& v);

// Do the functionals of every pair of cones agree on shared generators?
bool pl_is_continuous(const PLFunction& f);

// Common refinement of the fans intersected with restrict_to: every maximal
// cell is triangulated (simplicial, pointed), cells are full-dimensional
// inside restrict_to, deduplicated, and sorted.
Fan common_refinement(const std::vector<Fan>& fans, const Cone& restrict_to);
Fan common_refinement(const std::vector<std::vector<ConeHRep>>& regions,
                      const ConeHRep& restrict_to);

}  // namespace alphapoly
