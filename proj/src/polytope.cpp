#include "alphapoly/polytope.hpp"

#include <algorithm>

#include "alphapoly/linsolve.hpp"

namespace alphapoly {

namespace {

std::vector<LinConstraint> facet_constraints(const HPolytope& p) {
  // constant + normal . y >= 0  becomes  -normal . y <= constant.
  std::vector<LinConstraint> rows;
  for (const Facet& f : p.facets)
    rows.push_back({neg(f.normal), Rel::LE, f.constant});
  return rows;
}

}  // namespace

Facet canonical_facet(const Rat& constant, const QVec& normal) {
  if (is_zero(normal)) throw domain_error("facet with zero normal");
  const QVec prim = primitive_integer(normal);
  Rat factor;
  for (std::size_t i = 0; i < normal.size(); ++i)
    if (normal[i] != 0) {
      factor = prim[i] / normal[i];
      break;
    }
  return Facet{constant * factor, prim};
}

HPolytope make_hpolytope(int rank, const std::vector<Facet>& facets) {
  HPolytope p;
  p.rank = rank;
  for (const Facet& f : facets) {
    if (static_cast<int>(f.normal.size()) != rank)
      throw domain_error("facet normal of wrong length");
    p.facets.push_back(canonical_facet(f.constant, f.normal));
  }
  return p;
}

Rat facet_value(const HPolytope& p, int a, const QVec& y) {
  return p.facets[a].constant + dot(p.facets[a].normal, y);
}

bool hull_membership(const QVec& y, const HPolytope& p) {
  for (std::size_t a = 0; a < p.facets.size(); ++a)
    if (facet_value(p, static_cast<int>(a), y) < 0) return false;
  return true;
}

bool is_empty(const HPolytope& p) {
  return !lp_feasible(p.rank, facet_constraints(p));
}

VPolytope dual_description(const HPolytope& p) {
  VPolytope v;
  v.rank = p.rank;
  v.vertices = enumerate_vertices(facet_constraints(p), p.rank);
  // Solidity keeps the facet/vertex duality clean; callers relying on
  // lower-dimensional sets go through slice_by_subspace instead.
  Matrix diffs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i)
    diffs.push_back(sub(v.vertices[i], v.vertices[0]));
  if (matrix_rank(diffs) != p.rank)
    throw domain_error("polytope is not solid");
  return v;
}

HPolytope dual_description(const VPolytope& v) {
  const int r = v.rank;
  if (v.vertices.empty()) throw domain_error("empty vertex list");
  Matrix diffs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i)
    diffs.push_back(sub(v.vertices[i], v.vertices[0]));
  if (matrix_rank(diffs) != r) throw domain_error("polytope is not solid");

  // Each facet hyperplane is spanned by r affinely independent vertices,
  // oriented so the polytope sits on the nonnegative side.
  std::vector<Facet> facets;
  const int n = static_cast<int>(v.vertices.size());
  // Iterate over r-subsets via combinations of sorted vertex indices.
  std::vector<int> comb(r);
  for (int i = 0; i < r; ++i) comb[i] = i;
  auto advance = [&]() -> bool {
    int i = r - 1;
    while (i >= 0 && comb[i] == n - r + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  if (n < r) throw domain_error("too few vertices");
  do {
    Matrix rows;
    for (int i = 1; i < r; ++i)
      rows.push_back(sub(v.vertices[comb[i]], v.vertices[comb[0]]));
    const std::vector<QVec> ns = null_space(rows, r);
    if (ns.size() != 1) continue;
    QVec u = ns[0];
    const Rat level = dot(u, v.vertices[comb[0]]);
    bool above = false, below = false;
    for (const QVec& w : v.vertices) {
      const Rat s = dot(u, w);
      if (s > level) above = true;
      if (s < level) below = true;
    }
    if (above == below) continue;  // crossing or degenerate span
    if (below) u = neg(u);  // orient inward: polytope on the >= side
    // Facet: dot(u, y) >= level  <=>  -level + u . y >= 0.
    const Rat c = -dot(u, v.vertices[comb[0]]);
    facets.push_back(canonical_facet(c, u));
  } while (advance());

  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.constant < b.constant;
  });
  facets.erase(std::unique(facets.begin(), facets.end(),
                           [](const Facet& a, const Facet& b) {
                             return a.normal == b.normal &&
                                    a.constant == b.constant;
                           }),
               facets.end());
  HPolytope p;
  p.rank = r;
  p.facets = facets;
  return p;
}

Rat support_value(const VPolytope& v, const QVec& x) {
  if (v.vertices.empty()) throw domain_error("empty vertex list");
  Rat best = dot(x, v.vertices[0]);
  for (std::size_t i = 1; i < v.vertices.size(); ++i)
    best = std::max(best, dot(x, v.vertices[i]));
  return best;
}

std::vector<QVec> lattice_points(const HPolytope& p, long m) {
  if (m < 1) throw domain_error("level must be >= 1");
  const VPolytope v = dual_description(p);
  const Rat mm = rat(m);
  std::vector<long> lo(p.rank), hi(p.rank);
  for (int i = 0; i < p.rank; ++i) {
    Rat mn = v.vertices[0][i], mx = v.vertices[0][i];
    for (const QVec& w : v.vertices) {
      mn = std::min(mn, w[i]);
      mx = std::max(mx, w[i]);
    }
    lo[i] = static_cast<long>(ceil_rat(mm * mn));
    hi[i] = static_cast<long>(floor_rat(mm * mx));
  }
  std::vector<QVec> pts;
  QVec cur = zero_vec(p.rank);
  // Odometer over the integer box, then the exact membership filter.
  std::vector<long> at(lo);
  if (p.rank == 0) return {QVec{}};
  for (;;) {
    for (int i = 0; i < p.rank; ++i) cur[i] = rat(at[i]);
    bool inside = true;
    for (std::size_t a = 0; a < p.facets.size() && inside; ++a)
      inside = mm * p.facets[a].constant + dot(p.facets[a].normal, cur) >= 0;
    if (inside) pts.push_back(cur);
    int i = p.rank - 1;
    while (i >= 0 && at[i] == hi[i]) {
      at[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++at[i];
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

std::vector<std::pair<QVec, Cone>> normal_fan_cells(const HPolytope& p) {
  const VPolytope v = dual_description(p);
  std::vector<std::pair<QVec, Cone>> cells;
  for (const QVec& vert : v.vertices) {
    std::vector<QVec> gens;
    for (std::size_t a = 0; a < p.facets.size(); ++a)
      if (facet_value(p, static_cast<int>(a), vert) == 0)
        gens.push_back(p.facets[a].normal);
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Reduce to extreme rays (no-op at simple vertices, where the active
    // normals are linearly independent).
    if (matrix_rank(gens) != static_cast<int>(gens.size())) {
      std::vector<QVec> extreme;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        // gens[i] redundant iff it lies in the cone of the others.
        std::vector<LinConstraint> rows;
        const int k = static_cast<int>(gens.size()) - 1;
        for (int c = 0; c < p.rank; ++c) {
          LinConstraint eq;
          eq.rel = Rel::EQ;
          eq.rhs = gens[i][c];
          for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) eq.row.push_back(gens[j][c]);
          rows.push_back(eq);
        }
        for (int j = 0; j < k; ++j) {
          LinConstraint pos;
          pos.row = zero_vec(k);
          pos.row[j] = -1;
          pos.rel = Rel::LE;
          pos.rhs = Rat(0);
          rows.push_back(pos);
        }
        if (!lp_feasible(k, rows)) extreme.push_back(gens[i]);
      }
      gens = std::move(extreme);
    }
    Cone c;
    c.rank = p.rank;
    c.generators = gens;
    cells.emplace_back(vert, std::move(c));
  }
  return cells;
}

Fan normal_fan(const HPolytope& p) {
  Fan f;
  f.rank = p.rank;
  for (auto& [vert, cone] : normal_fan_cells(p)) f.cones.push_back(cone);
  return f;
}

std::vector<ConeHRep> support_regions(const VPolytope& v) {
  std::vector<ConeHRep> regions;
  for (const QVec& q : v.vertices) {
    ConeHRep h;
    h.dim = v.rank;
    for (const QVec& other : v.vertices) {
      if (other == q) continue;
      h.ineqs.push_back(sub(q, other));
    }
    regions.push_back(std::move(h));
  }
  return regions;
}

Fan support_fan(const VPolytope& v) {
  Fan f;
  f.rank = v.rank;
  for (const ConeHRep& h : support_regions(v)) {
    const ConeVRep g = cone_generators(h);
    Cone c;
    c.rank = v.rank;
    c.generators = g.rays;
    for (const QVec& l : g.lineality) {
      c.generators.push_back(l);
      c.generators.push_back(neg(l));
    }
    std::sort(c.generators.begin(), c.generators.end(), lex_less);
    f.cones.push_back(std::move(c));
  }
  return f;
}

Slice slice_by_subspace(const HPolytope& p,
                        const std::vector<QVec>& basis_vectors) {
  Slice s;
  s.basis = basis_vectors;
  const int k = static_cast<int>(basis_vectors.size());
  if (k == 0) {
    if (hull_membership(zero_vec(p.rank), p)) {
      s.span_vertices.push_back(QVec{});
      s.ambient_vertices.push_back(zero_vec(p.rank));
    }
    return s;
  }
  std::vector<LinConstraint> rows;
  for (const Facet& f : p.facets) {
    LinConstraint c;
    c.rel = Rel::LE;
    c.rhs = f.constant;
    for (const QVec& b : basis_vectors) c.row.push_back(-dot(f.normal, b));
    rows.push_back(c);
  }
  const std::vector<QVec> span_verts =
      enumerate_vertices_allow_empty(rows, k);
  for (const QVec& t : span_verts) {
    QVec y = zero_vec(p.rank);
    for (int j = 0; j < k; ++j) y = add(y, scale(t[j], basis_vectors[j]));
    s.span_vertices.push_back(t);
    s.ambient_vertices.push_back(y);
  }
  // Sort the pair of lists by the ambient order.
  std::vector<std::size_t> order(s.ambient_vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(s.ambient_vertices[a], s.ambient_vertices[b]);
  });
  Slice sorted;
  sorted.basis = s.basis;
  for (std::size_t i : order) {
    sorted.span_vertices.push_back(s.span_vertices[i]);
    sorted.ambient_vertices.push_back(s.ambient_vertices[i]);
  }
  return sorted;
}

HPolytope erode(const HPolytope& q, const VPolytope& h) {
  if (h.vertices.empty()) throw domain_error("eroding by an empty hull");
  HPolytope out;
  out.rank = q.rank;
  for (const Facet& f : q.facets) {
    Rat shift = dot(f.normal, h.vertices[0]);
    for (const QVec& w : h.vertices) shift = std::min(shift, dot(f.normal, w));
    out.facets.push_back(Facet{f.constant + shift, f.normal});
  }
  return out;
}

}  // namespace alphapoly
