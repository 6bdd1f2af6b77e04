// Polyhedral kernel: vertex enumeration, cone conversions, projection,
// triangulation, dual descriptions, fans, slices, and erosion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "alphapoly/polytope.hpp"

using namespace alphapoly;

namespace {

QVec qv(std::initializer_list<long> entries) {
  QVec v;
  for (long e : entries) v.push_back(rat(e));
  return v;
}

LinConstraint le(const QVec& row, const Rat& rhs) {
  return {row, Rel::LE, rhs};
}

// Unit square [-1,1]^2 as  1 + normal . y >= 0.
HPolytope square() {
  return make_hpolytope(2, {{rat(1), qv({1, 0})},
                            {rat(1), qv({-1, 0})},
                            {rat(1), qv({0, 1})},
                            {rat(1), qv({0, -1})}});
}

// Pentagon: square with the (1,1) corner cut off along  x + y <= 1.
HPolytope pentagon() {
  return make_hpolytope(2, {{rat(1), qv({-1, -1})},
                            {rat(1), qv({-1, 0})},
                            {rat(1), qv({0, -1})},
                            {rat(1), qv({1, 0})},
                            {rat(1), qv({0, 1})}});
}

// Quadrilateral with vertices (2,-1), (-1,2), (2,-3), (-3,2).
HPolytope quadrilateral() {
  return make_hpolytope(2, {{rat(1), qv({1, 1})},
                            {rat(1), qv({-1, -1})},
                            {rat(2), qv({-1, 0})},
                            {rat(2), qv({0, -1})}});
}

std::vector<QVec> sorted(std::vector<QVec> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

}  // namespace

TEST_CASE("facet canonicalization scales constants with the normal") {
  const Facet f = canonical_facet(rat(2), qv({2, 4}));
  CHECK(f.normal == qv({1, 2}));
  CHECK(f.constant == rat(1));
  const Facet g = canonical_facet(rat(1), {rat(-1, 2), rat(1, 4)});
  CHECK(g.normal == qv({-2, 1}));
  CHECK(g.constant == rat(4));
  CHECK_THROWS_AS(canonical_facet(rat(1), qv({0, 0})), domain_error);
  CHECK_THROWS_AS(make_hpolytope(2, {{rat(1), qv({1})}}), domain_error);
}

TEST_CASE("membership and facet values") {
  const HPolytope p = square();
  CHECK(facet_value(p, 0, qv({1, 1})) == rat(2));
  CHECK(facet_value(p, 1, qv({1, 1})) == rat(0));
  CHECK(hull_membership(qv({0, 0}), p));
  CHECK(hull_membership(qv({1, -1}), p));
  CHECK_FALSE(hull_membership({rat(1), rat(-3, 2)}, p));
  CHECK_FALSE(is_empty(p));
  const HPolytope none = make_hpolytope(
      1, {{rat(-2), qv({1})}, {rat(1), qv({-1})}});  // x >= 2 and x <= 1
  CHECK(is_empty(none));
}

TEST_CASE("vertex enumeration covers degenerate feasible sets") {
  const std::vector<LinConstraint> box = {
      le(qv({1, 0}), rat(1)), le(qv({-1, 0}), rat(1)), le(qv({0, 1}), rat(1)),
      le(qv({0, -1}), rat(1))};
  CHECK(enumerate_vertices(box, 2) ==
        std::vector<QVec>{qv({-1, -1}), qv({-1, 1}), qv({1, -1}), qv({1, 1})});

  // A segment in the plane: every endpoint is still found because vertexhood
  // is rank of tight rows, not local dimension.
  const std::vector<LinConstraint> seg = {
      le(qv({1, 1}), rat(0)), le(qv({-1, -1}), rat(0)), le(qv({1, 0}), rat(1)),
      le(qv({-1, 0}), rat(1))};
  CHECK(enumerate_vertices(seg, 2) ==
        std::vector<QVec>{qv({-1, 1}), qv({1, -1})});

  // A single point.
  const std::vector<LinConstraint> pt = {le(qv({1, 0}), rat(3)),
                                         le(qv({-1, 0}), rat(-3)),
                                         le(qv({0, 1}), rat(-2)),
                                         le(qv({0, -1}), rat(2))};
  CHECK(enumerate_vertices(pt, 2) == std::vector<QVec>{qv({3, -2})});

  const std::vector<LinConstraint> none = {le(qv({1}), rat(-1)),
                                           le(qv({-1}), rat(-2))};
  CHECK_THROWS_AS(enumerate_vertices(none, 1), domain_error);
  CHECK(enumerate_vertices_allow_empty(none, 1).empty());

  const std::vector<LinConstraint> ray = {le(qv({-1}), rat(0))};
  CHECK_THROWS_AS(enumerate_vertices(ray, 1), domain_error);
  CHECK_THROWS_AS(enumerate_vertices_allow_empty(ray, 1), domain_error);
}

TEST_CASE("projection eliminates variables with exact redundancy pruning") {
  const std::vector<LinConstraint> box = {
      le(qv({1, 0}), rat(1)), le(qv({-1, 0}), rat(1)), le(qv({0, 1}), rat(1)),
      le(qv({0, -1}), rat(1))};
  const Projection pr = project_polyhedron(box, 2, {1});
  CHECK(pr.kept == std::vector<int>{0});
  // The shadow is exactly [-1, 1].
  auto member = [&](const Rat& x) {
    for (const LinConstraint& c : pr.constraints) {
      const Rat lhs = c.row[0] * x;
      if (c.rel == Rel::LE ? !(lhs <= c.rhs) : !(lhs == c.rhs)) return false;
    }
    return true;
  };
  CHECK(member(rat(-1)));
  CHECK(member(rat(0)));
  CHECK(member(rat(1)));
  CHECK_FALSE(member(rat(3, 2)));
  CHECK_FALSE(member(rat(-3, 2)));

  // Equalities survive elimination:  x + y == 1, x - y == 0  pins x == 1/2.
  const std::vector<LinConstraint> eqs = {{qv({1, 1}), Rel::EQ, rat(1)},
                                          {qv({1, -1}), Rel::EQ, rat(0)}};
  const Projection pe = project_polyhedron(eqs, 2, {1});
  auto emember = [&](const Rat& x) {
    for (const LinConstraint& c : pe.constraints) {
      const Rat lhs = c.row[0] * x;
      if (c.rel == Rel::LE ? !(lhs <= c.rhs) : !(lhs == c.rhs)) return false;
    }
    return true;
  };
  CHECK(emember(rat(1, 2)));
  CHECK_FALSE(emember(rat(0)));

  // Infeasible input surfaces as an impossible row over the kept variables.
  const std::vector<LinConstraint> bad = {le(qv({0, 1}), rat(-1)),
                                          le(qv({0, -1}), rat(-1))};
  const Projection pb = project_polyhedron(bad, 2, {1});
  bool impossible = false;
  for (const LinConstraint& c : pb.constraints)
    if (is_zero(c.row) && c.rel == Rel::LE && c.rhs < 0) impossible = true;
  CHECK(impossible);
}

TEST_CASE("cone generators split rays from lineality") {
  // First quadrant: two rays, no lineality.
  ConeVRep q = cone_generators({2, {qv({1, 0}), qv({0, 1})}, {}});
  CHECK(q.rays == std::vector<QVec>{qv({0, 1}), qv({1, 0})});
  CHECK(q.lineality.empty());

  // Half plane: one ray plus a lineality direction.
  ConeVRep h = cone_generators({2, {qv({1, 0})}, {}});
  REQUIRE(h.rays.size() == 1);
  REQUIRE(h.lineality.size() == 1);
  CHECK(h.rays[0] == qv({1, 0}));
  CHECK(dot(h.lineality[0], qv({1, 0})) == rat(0));

  // Full space and zero cone.
  ConeVRep full = cone_generators({2, {}, {}});
  CHECK(full.rays.empty());
  CHECK(full.lineality.size() == 2);
  ConeVRep zero = cone_generators({2, {}, {qv({1, 0}), qv({0, 1})}});
  CHECK(zero.rays.empty());
  CHECK(zero.lineality.empty());

  // Dominant cone of the rank-3 chain system: pointed part in the sum-zero
  // plane plus the diagonal lineality.
  ConeVRep c =
      cone_generators({3, {qv({1, -1, 0}), qv({0, 1, -1})}, {}});
  CHECK(c.rays == std::vector<QVec>{qv({1, 1, -2}), qv({2, -1, -1})});
  REQUIRE(c.lineality.size() == 1);
  CHECK(primitive_integer(c.lineality[0]) == qv({1, 1, 1}));

  // Equations participate: restrict the previous cone to the sum-zero plane.
  ConeVRep c0 = cone_generators(
      {3, {qv({1, -1, 0}), qv({0, 1, -1})}, {qv({1, 1, 1})}});
  CHECK(c0.rays == std::vector<QVec>{qv({1, 1, -2}), qv({2, -1, -1})});
  CHECK(c0.lineality.empty());

  CHECK(cone_dim(c, 3) == 3);
  CHECK(cone_dim(c0, 3) == 2);
  CHECK(cone_dim(zero, 2) == 0);
}

TEST_CASE("cone facets cut the cone out of its span") {
  const ConeHRep f = cone_facets(2, {qv({1, 0}), qv({1, 2})});
  CHECK(f.eqs.empty());
  CHECK(sorted(f.ineqs) == std::vector<QVec>{qv({0, 1}), qv({2, -1})});
  CHECK(cone_contains(f, qv({1, 1})));
  CHECK(cone_contains(f, qv({3, 6})));
  CHECK_FALSE(cone_contains(f, qv({0, 1})));
  CHECK_FALSE(cone_contains(f, qv({1, -1})));

  // A single ray: its span is pinned by an equation, the ray direction by
  // one inequality inside the span.
  const ConeHRep r = cone_facets(2, {qv({1, 1})});
  REQUIRE(r.eqs.size() == 1);
  CHECK(dot(r.eqs[0], qv({1, 1})) == rat(0));
  CHECK(cone_contains(r, qv({2, 2})));
  CHECK_FALSE(cone_contains(r, qv({-1, -1})));
  CHECK_FALSE(cone_contains(r, qv({1, 0})));

  // Lineality via +/- pairs: a half plane.
  const ConeHRep hp = cone_facets(2, {qv({1, 0}), qv({0, 1}), qv({0, -1})});
  CHECK(hp.eqs.empty());
  REQUIRE(hp.ineqs.size() == 1);
  CHECK(hp.ineqs[0] == qv({1, 0}));

  // Round trip through the generator form.
  const ConeVRep back = cone_generators(f);
  CHECK(back.rays == std::vector<QVec>{qv({1, 0}), qv({1, 2})});
  CHECK(back.lineality.empty());
}

TEST_CASE("pulling triangulation splits a square-based cone") {
  const std::vector<QVec> gens = {qv({-1, -1, 1}), qv({-1, 1, 1}),
                                  qv({1, -1, 1}), qv({1, 1, 1})};
  const std::vector<std::vector<QVec>> pieces = triangulate_cone(3, gens);
  REQUIRE(pieces.size() == 2);
  // Both pieces contain the pulled (lexicographically least) ray.
  for (const std::vector<QVec>& piece : pieces) {
    REQUIRE(piece.size() == 3);
    CHECK(std::find(piece.begin(), piece.end(), qv({-1, -1, 1})) !=
          piece.end());
  }
  // A simplicial cone triangulates as itself (generators sorted).
  const std::vector<QVec> simple = {qv({1, 0}), qv({0, 1})};
  CHECK(triangulate_cone(2, simple) ==
        std::vector<std::vector<QVec>>{{qv({0, 1}), qv({1, 0})}});
}

TEST_CASE("dual descriptions agree in both directions") {
  const HPolytope sq = square();
  const VPolytope sqv = dual_description(sq);
  CHECK(sqv.vertices ==
        std::vector<QVec>{qv({-1, -1}), qv({-1, 1}), qv({1, -1}), qv({1, 1})});

  const HPolytope back = dual_description(sqv);
  REQUIRE(back.facets.size() == 4);
  for (const Facet& f : back.facets) CHECK(f.constant == rat(1));

  const VPolytope quadv = dual_description(quadrilateral());
  CHECK(quadv.vertices == std::vector<QVec>{qv({-3, 2}), qv({-1, 2}),
                                            qv({2, -3}), qv({2, -1})});
  CHECK(dual_description(pentagon()).vertices.size() == 5);

  // Vertex -> facet -> vertex is the identity on already-sorted input.
  const VPolytope tri{2, {qv({-1, -1}), qv({0, 1}), qv({1, 0})}};
  const HPolytope trih = dual_description(tri);
  REQUIRE(trih.facets.size() == 3);
  CHECK(dual_description(trih).vertices == tri.vertices);
  for (const Facet& f : trih.facets) CHECK(f.constant == rat(1));

  // Degenerate inputs are rejected rather than silently mishandled.
  CHECK_THROWS_AS(dual_description(VPolytope{2, {qv({0, 0}), qv({1, 1})}}),
                  domain_error);
  CHECK_THROWS_AS(
      dual_description(make_hpolytope(2, {{rat(0), qv({1, 0})},
                                          {rat(0), qv({-1, 0})},
                                          {rat(1), qv({0, 1})},
                                          {rat(1), qv({0, -1})}})),
      domain_error);  // a segment is not solid
  CHECK_THROWS_AS(dual_description(make_hpolytope(2, {{rat(1), qv({1, 0})}})),
                  domain_error);  // unbounded
}

TEST_CASE("support values are vertex maxima") {
  const VPolytope sqv = dual_description(square());
  CHECK(support_value(sqv, qv({1, 1})) == rat(2));
  CHECK(support_value(sqv, qv({-1, 0})) == rat(1));
  CHECK(support_value(sqv, {rat(1, 2), rat(-1, 3)}) == rat(5, 6));
  CHECK(support_value(sqv, qv({0, 0})) == rat(0));
}

TEST_CASE("lattice point enumeration counts dilations exactly") {
  const std::vector<QVec> sq1 = lattice_points(square(), 1);
  REQUIRE(sq1.size() == 9);
  CHECK(sq1.front() == qv({-1, -1}));
  CHECK(sq1.back() == qv({1, 1}));
  CHECK(std::is_sorted(sq1.begin(), sq1.end(), lex_less));
  CHECK(lattice_points(square(), 2).size() == 25);

  CHECK(lattice_points(pentagon(), 1).size() == 8);  // 3x3 grid minus (1,1)

  const HPolytope simplex = make_hpolytope(
      2, {{rat(0), qv({1, 0})}, {rat(0), qv({0, 1})}, {rat(1), qv({-1, -1})}});
  CHECK(lattice_points(simplex, 1).size() == 3);
  CHECK(lattice_points(simplex, 3).size() == 10);
}

TEST_CASE("inner normal fan attaches facet-normal cones to vertices") {
  const std::vector<std::pair<QVec, Cone>> cells = normal_fan_cells(square());
  REQUIRE(cells.size() == 4);
  CHECK(cells[0].first == qv({-1, -1}));
  CHECK(cells[0].second.generators ==
        std::vector<QVec>{qv({0, 1}), qv({1, 0})});
  CHECK(cells[3].first == qv({1, 1}));
  CHECK(cells[3].second.generators ==
        std::vector<QVec>{qv({-1, 0}), qv({0, -1})});

  const Fan fan = normal_fan(square());
  REQUIRE(fan.cones.size() == 4);
  for (const Cone& c : fan.cones) CHECK(c.generators.size() == 2);
}

TEST_CASE("support regions describe where each vertex attains the maximum") {
  const VPolytope sqv = dual_description(square());
  const std::vector<ConeHRep> regions = support_regions(sqv);
  REQUIRE(regions.size() == 4);
  // Vertex order is sorted, so (1,1) is last; its region is the first
  // quadrant.
  CHECK(cone_contains(regions[3], qv({1, 1})));
  CHECK(cone_contains(regions[3], qv({2, 1})));
  CHECK_FALSE(cone_contains(regions[3], qv({-1, 2})));
  for (const ConeHRep& r : regions) CHECK(cone_contains(r, qv({0, 0})));

  // A segment: regions are half planes, so the fan cones carry lineality.
  const VPolytope seg{2, {qv({-1, 0}), qv({1, 0})}};
  const Fan sf = support_fan(seg);
  REQUIRE(sf.cones.size() == 2);
  for (const Cone& c : sf.cones) {
    bool has_pair = false;
    for (const QVec& g : c.generators)
      if (std::find(c.generators.begin(), c.generators.end(), neg(g)) !=
          c.generators.end())
        has_pair = true;
    CHECK(has_pair);
  }
}

TEST_CASE("subspace slices report span and ambient coordinates") {
  const Slice diag = slice_by_subspace(quadrilateral(), {qv({1, 1})});
  REQUIRE(diag.ambient_vertices.size() == 2);
  CHECK(diag.ambient_vertices[0] == (QVec{rat(-1, 2), rat(-1, 2)}));
  CHECK(diag.ambient_vertices[1] == (QVec{rat(1, 2), rat(1, 2)}));
  CHECK(diag.span_vertices[0] == (QVec{rat(-1, 2)}));
  CHECK(diag.span_vertices[1] == (QVec{rat(1, 2)}));

  // Empty basis: the origin when it lies inside, nothing otherwise.
  const Slice origin = slice_by_subspace(square(), {});
  REQUIRE(origin.ambient_vertices.size() == 1);
  CHECK(origin.ambient_vertices[0] == qv({0, 0}));
  CHECK(origin.span_vertices[0].empty());

  const HPolytope shifted = make_hpolytope(
      2, {{rat(-2), qv({1, 0})}, {rat(3), qv({-1, 0})},
          {rat(-2), qv({0, 1})}, {rat(3), qv({0, -1})}});
  CHECK(slice_by_subspace(shifted, {}).ambient_vertices.empty());
  CHECK(slice_by_subspace(shifted, {qv({1, 0})}).ambient_vertices.empty());
}

TEST_CASE("erosion shrinks constants facet by facet") {
  const VPolytope diamond{2,
                          {{rat(-1, 2), rat(0)},
                           {rat(0), rat(-1, 2)},
                           {rat(0), rat(1, 2)},
                           {rat(1, 2), rat(0)}}};
  const HPolytope eroded = erode(square(), diamond);
  REQUIRE(eroded.facets.size() == 4);
  for (std::size_t a = 0; a < eroded.facets.size(); ++a) {
    CHECK(eroded.facets[a].normal == square().facets[a].normal);
    CHECK(eroded.facets[a].constant ==
          rat(1) - support_value(diamond, neg(eroded.facets[a].normal)));
    CHECK(eroded.facets[a].constant == rat(1, 2));
  }

  const VPolytope big{2, {qv({-3, 0}), qv({0, -3}), qv({0, 3}), qv({3, 0})}};
  CHECK(is_empty(erode(square(), big)));
}
