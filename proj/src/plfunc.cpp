#include "alphapoly/plfunc.hpp"

#include <algorithm>

#include "alphapoly/linsolve.hpp"

namespace alphapoly {

namespace {

Cone cone_from_vrep(int rank, const ConeVRep& v) {
  Cone c;
  c.rank = rank;
  c.generators = v.rays;
  for (const QVec& l : v.lineality) {
    c.generators.push_back(l);
    c.generators.push_back(neg(l));
  }
  std::sort(c.generators.begin(), c.generators.end(), lex_less);
  c.generators.erase(
      std::unique(c.generators.begin(), c.generators.end()),
      c.generators.end());
  return c;
}

}  // namespace

PLFunction upsilon_from_divisor(const HPolytope& p, const DivisorData& d) {
  if (d.coefficients.size() != p.facets.size())
    throw domain_error("one divisor coefficient per facet required");
  PLFunction f;
  f.fan.rank = p.rank;
  for (const auto& [vertex, cone] : normal_fan_cells(p)) {
    // The functional nu with nu(normal_a) = -coeff_a over the facets active
    // at this vertex; solvable exactly when the divisor is linear there.
    Matrix rows;
    QVec rhs;
    for (std::size_t a = 0; a < p.facets.size(); ++a) {
      if (facet_value(p, static_cast<int>(a), vertex) != 0) continue;
      rows.push_back(p.facets[a].normal);
      rhs.push_back(-d.coefficients[a]);
    }
    const auto sol = solve_affine(rows, rhs);
    if (!sol || !sol->directions.empty())
      throw domain_error("divisor data is not linear on a normal cone");
    f.fan.cones.push_back(cone);
    f.functionals.push_back(sol->particular);
    f.hreps.push_back(cone_facets(p.rank, cone.generators));
  }
  return f;
}

DivisorData anticanonical_coeffs(const HPolytope& p, const RootData& rd) {
  DivisorData d;
  for (const Facet& f : p.facets) {
    Rat c(1);
    for (const Root& r : rd.positive) {
      Rat v = dot(r.alpha, f.normal);
      if (v < 0) v = -v;
      c += v;
    }
    d.coefficients.push_back(c);
  }
  return d;
}

Rat pl_evaluate(const PLFunction& f, const QVec& x) {
  for (std::size_t i = 0; i < f.hreps.size(); ++i)
    if (cone_contains(f.hreps[i], x)) return dot(f.functionals[i], x);
  throw domain_error("point outside the fan support");
}

PLFunction support_plfunction(const VPolytope& v) {
  PLFunction f;
  f.fan = support_fan(v);
  f.hreps = support_regions(v);
  f.functionals = v.vertices;
  return f;
}

bool pl_is_continuous(const PLFunction& f) {
  for (std::size_t i = 0; i < f.fan.cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.fan.cones.size(); ++j)
      for (const QVec& g : f.fan.cones[i].generators)
        if (cone_contains(f.hreps[j], g) &&
            dot(f.functionals[i], g) != dot(f.functionals[j], g))
          return false;
  return true;
}

Fan common_refinement(const std::vector<std::vector<ConeHRep>>& regions,
                      const ConeHRep& restrict_to) {
  const int rank = restrict_to.dim;
  std::vector<ConeHRep> cells{restrict_to};
  for (const std::vector<ConeHRep>& fan_regions : regions) {
    std::vector<ConeHRep> next;
    for (const ConeHRep& cell : cells)
      for (const ConeHRep& reg : fan_regions) {
        ConeHRep combined = cell;
        combined.ineqs.insert(combined.ineqs.end(), reg.ineqs.begin(),
                              reg.ineqs.end());
        combined.eqs.insert(combined.eqs.end(), reg.eqs.begin(),
                            reg.eqs.end());
        next.push_back(std::move(combined));
      }
    cells = std::move(next);
  }

  // Keep the solid cells, split away any lineality, triangulate.
  std::vector<std::vector<QVec>> simplices;
  std::vector<ConeHRep> stack = std::move(cells);
  while (!stack.empty()) {
    ConeHRep cell = std::move(stack.back());
    stack.pop_back();
    const ConeVRep v = cone_generators(cell);
    if (cone_dim(v, rank) != rank) continue;
    if (!v.lineality.empty()) {
      // Split along the first lineality direction; both halves refine the
      // cell, which is all a refinement needs.
      const QVec& l = v.lineality.front();
      ConeHRep plus = cell, minus = cell;
      plus.ineqs.push_back(l);
      minus.ineqs.push_back(neg(l));
      stack.push_back(std::move(plus));
      stack.push_back(std::move(minus));
      continue;
    }
    for (std::vector<QVec>& s : triangulate_cone(rank, v.rays))
      simplices.push_back(std::move(s));
  }
  std::sort(simplices.begin(), simplices.end(), lex_less_vecs);
  simplices.erase(std::unique(simplices.begin(), simplices.end()),
                  simplices.end());

  Fan out;
  out.rank = rank;
  for (std::vector<QVec>& s : simplices) {
    Cone c;
    c.rank = rank;
    c.generators = std::move(s);
    out.cones.push_back(std::move(c));
  }
  return out;
}

Fan common_refinement(const std::vector<Fan>& fans, const Cone& restrict_to) {
  std::vector<std::vector<ConeHRep>> regions;
  for (const Fan& f : fans) {
    std::vector<ConeHRep> rs;
    for (const Cone& c : f.cones)
      rs.push_back(cone_facets(f.rank, c.generators));
    regions.push_back(std::move(rs));
  }
  return common_refinement(
      regions, cone_facets(restrict_to.rank, restrict_to.generators));
}

}  // namespace alphapoly
