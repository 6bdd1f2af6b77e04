#include "alphapoly/polyhedra.hpp"

#include <algorithm>
#include <set>

#include "alphapoly/linsolve.hpp"

namespace alphapoly {

namespace {

// Visit every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void sort_dedupe(std::vector<QVec>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool satisfies_all(const std::vector<LinConstraint>& h, const QVec& x) {
  for (const LinConstraint& c : h) {
    const Rat v = dot(c.row, x);
    if (c.rel == Rel::LE ? !(v <= c.rhs) : !(v == c.rhs)) return false;
  }
  return true;
}

// Recession cone of {x : h}: homogenize every row to <= 0 / == 0.
ConeHRep recession_cone(const std::vector<LinConstraint>& h, int dim) {
  ConeHRep r;
  r.dim = dim;
  for (const LinConstraint& c : h) {
    if (c.rel == Rel::LE)
      r.ineqs.push_back(neg(c.row));
    else
      r.eqs.push_back(c.row);
  }
  return r;
}

std::vector<QVec> enumerate_vertices_impl(const std::vector<LinConstraint>& h,
                                          int dim, bool allow_empty) {
  const ConeVRep rec = cone_generators(recession_cone(h, dim));
  if (!rec.rays.empty() || !rec.lineality.empty())
    throw domain_error("unbounded polyhedron");

  std::vector<QVec> vertices;
  const int n = static_cast<int>(h.size());
  // A vertex is a feasible point whose tight rows have rank dim, so some
  // dim-subset of rows already pins it down uniquely.
  for_each_subset(n, dim, [&](const std::vector<int>& idx) {
    Matrix a;
    QVec b;
    for (int i : idx) {
      a.push_back(h[i].row);
      b.push_back(h[i].rhs);
    }
    const auto x = solve_linear(a, b);
    if (x && satisfies_all(h, *x)) vertices.push_back(*x);
  });
  sort_dedupe(vertices);
  if (vertices.empty() && !allow_empty)
    throw domain_error("empty polyhedron");
  return vertices;
}

}  // namespace

std::vector<QVec> enumerate_vertices(const std::vector<LinConstraint>& h,
                                     int dim) {
  return enumerate_vertices_impl(h, dim, /*allow_empty=*/false);
}

std::vector<QVec> enumerate_vertices_allow_empty(
    const std::vector<LinConstraint>& h, int dim) {
  return enumerate_vertices_impl(h, dim, /*allow_empty=*/true);
}

// ---------------------------------------------------------------------------
// Cones.

bool cone_contains(const ConeHRep& h, const QVec& x) {
  for (const QVec& n : h.ineqs)
    if (dot(n, x) < 0) return false;
  for (const QVec& e : h.eqs)
    if (dot(e, x) != 0) return false;
  return true;
}

ConeVRep cone_generators(const ConeHRep& h) {
  Matrix all_rows = h.ineqs;
  all_rows.insert(all_rows.end(), h.eqs.begin(), h.eqs.end());

  const std::vector<QVec> lin = null_space(all_rows, h.dim);
  if (!lin.empty()) {
    // Split off the lineality: intersect with its orthogonal complement,
    // where the cone has trivial lineality, and recurse in complement
    // coordinates x = W t.
    const std::vector<QVec> w = null_space(lin, h.dim);
    ConeHRep sub;
    sub.dim = static_cast<int>(w.size());
    auto to_sub = [&](const QVec& row) {
      QVec r(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) r[j] = dot(row, w[j]);
      return r;
    };
    for (const QVec& n : h.ineqs) sub.ineqs.push_back(to_sub(n));
    for (const QVec& e : h.eqs) sub.eqs.push_back(to_sub(e));
    const ConeVRep inner = cone_generators(sub);
    ConeVRep out;
    for (const QVec& t : inner.rays) {
      QVec x = zero_vec(h.dim);
      for (std::size_t j = 0; j < w.size(); ++j)
        x = add(x, scale(t[j], w[j]));
      out.rays.push_back(primitive_integer(x));
    }
    out.lineality = lin;
    sort_dedupe(out.rays);
    sort_dedupe(out.lineality);
    return out;
  }

  // Pointed cone: every extreme ray has tight rows of rank dim-1, so
  // (dim-1)-subsets of rows find them all; feasibility filters the rest.
  ConeVRep out;
  const int n = static_cast<int>(all_rows.size());
  for_each_subset(n, h.dim - 1, [&](const std::vector<int>& idx) {
    Matrix sel;
    for (int i : idx) sel.push_back(all_rows[i]);
    const std::vector<QVec> ns = null_space(sel, h.dim);
    if (ns.size() != 1) return;
    const QVec& v = ns[0];
    if (cone_contains(h, v))
      out.rays.push_back(primitive_integer(v));
    else if (cone_contains(h, neg(v)))
      out.rays.push_back(primitive_integer(neg(v)));
  });
  if (h.dim == 0) return out;
  sort_dedupe(out.rays);
  return out;
}

int cone_dim(const ConeVRep& v, int dim) {
  Matrix m = v.rays;
  m.insert(m.end(), v.lineality.begin(), v.lineality.end());
  (void)dim;
  return matrix_rank(m);
}

ConeHRep cone_facets(int dim, const std::vector<QVec>& generators) {
  ConeHRep h;
  h.dim = dim;

  // Basis of the linear span: greedy independent subset of the generators.
  Matrix span_basis;
  for (const QVec& g : generators) {
    Matrix test = span_basis;
    test.push_back(g);
    if (matrix_rank(test) > static_cast<int>(span_basis.size()))
      span_basis = std::move(test);
  }
  const int d = static_cast<int>(span_basis.size());

  // Equalities pin the span: its orthogonal complement.
  h.eqs = null_space(span_basis, dim);

  if (d == 0) return h;  // the zero cone

  // Span coordinates g = B t, solving the (injective) basis system.
  const Matrix bt = transpose(span_basis);  // dim x d, columns = basis
  std::vector<QVec> coords;
  for (const QVec& g : generators) {
    const auto t = solve_linear(bt, g);
    if (!t) throw domain_error("generator outside its own span");
    coords.push_back(*t);
  }

  // Facets of the solid span cone: hyperplanes through d-1 generators with
  // every generator on one side.
  std::vector<QVec> span_normals;
  const int n = static_cast<int>(coords.size());
  for_each_subset(n, d - 1, [&](const std::vector<int>& idx) {
    Matrix sel;
    for (int i : idx) sel.push_back(coords[i]);
    const std::vector<QVec> ns = null_space(sel, d);
    if (ns.size() != 1) return;
    QVec nvec = ns[0];
    bool pos = false, negside = false;
    for (const QVec& t : coords) {
      const Rat s = dot(nvec, t);
      if (s > 0) pos = true;
      if (s < 0) negside = true;
    }
    if (pos && negside) return;
    if (negside) nvec = neg(nvec);
    if (!pos && !negside) return;  // all generators on the hyperplane
    span_normals.push_back(primitive_integer(nvec));
  });
  sort_dedupe(span_normals);

  // Lift each span normal to an ambient vector inside the span: the unique
  // ntilde = B w with B^T B w = n satisfies ntilde . (B t) = n . t.
  Matrix gram(d, QVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram[i][j] = dot(span_basis[i], span_basis[j]);
  for (const QVec& nvec : span_normals) {
    const auto w = solve_linear(gram, nvec);
    if (!w) throw domain_error("degenerate span metric");
    QVec ambient = zero_vec(dim);
    for (int i = 0; i < d; ++i) ambient = add(ambient, scale((*w)[i], span_basis[i]));
    h.ineqs.push_back(primitive_integer(ambient));
  }
  std::sort(h.ineqs.begin(), h.ineqs.end(), lex_less);
  return h;
}

std::vector<std::vector<QVec>> triangulate_cone(
    int dim, const std::vector<QVec>& extreme_rays) {
  std::vector<QVec> rays = extreme_rays;
  sort_dedupe(rays);
  const int d = matrix_rank(rays);
  if (static_cast<int>(rays.size()) == d) return {rays};

  // Pull from the least ray: cone = union over facets not containing it of
  // the join of that ray with the facet triangulation.  Recursing with the
  // same global rule keeps shared faces consistent.
  const QVec apex = rays.front();
  const ConeHRep h = cone_facets(dim, rays);
  std::vector<std::vector<QVec>> pieces;
  for (const QVec& nvec : h.ineqs) {
    if (dot(nvec, apex) == 0) continue;
    std::vector<QVec> face;
    for (const QVec& r : rays)
      if (dot(nvec, r) == 0) face.push_back(r);
    for (std::vector<QVec> piece : triangulate_cone(dim, face)) {
      piece.push_back(apex);
      sort_dedupe(piece);
      pieces.push_back(std::move(piece));
    }
  }
  std::sort(pieces.begin(), pieces.end(), lex_less_vecs);
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  return pieces;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin projection.

namespace {

LinConstraint canonical_row(LinConstraint c) {
  if (is_zero(c.row)) return c;
  const QVec prim = primitive_integer(c.row);
  // primitive_integer rescales by a positive factor; the rhs scales along.
  Rat factor;
  for (std::size_t i = 0; i < c.row.size(); ++i)
    if (c.row[i] != 0) {
      factor = prim[i] / c.row[i];
      break;
    }
  c.row = prim;
  c.rhs = c.rhs * factor;
  if (c.rel == Rel::EQ) {
    // Equalities additionally get a positive leading coefficient.
    for (const Rat& x : c.row) {
      if (x == 0) continue;
      if (x < 0) {
        c.row = neg(c.row);
        c.rhs = -c.rhs;
      }
      break;
    }
  }
  return c;
}

void dedupe_rows(std::vector<LinConstraint>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const LinConstraint& a, const LinConstraint& b) {
              if (a.rel != b.rel) return a.rel < b.rel;
              if (a.row != b.row) return lex_less(a.row, b.row);
              return a.rhs < b.rhs;
            });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const LinConstraint& a, const LinConstraint& b) {
                           return a.rel == b.rel && a.row == b.row &&
                                  a.rhs == b.rhs;
                         }),
             rows.end());
}

// Drop rows implied by the others (exact LP test per row).
void prune_redundant(std::vector<LinConstraint>& rows, int dim) {
  for (std::size_t i = 0; i < rows.size();) {
    std::vector<LinConstraint> others;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i) others.push_back(rows[j]);
    LinearProgram lp;
    lp.num_vars = dim;
    lp.constraints = others;
    lp.objective = rows[i].row;
    lp.sense = Sense::Maximize;
    const LPResult res = lp_solve(lp);
    const bool redundant =
        res.status == LPStatus::Optimal && res.value <= rows[i].rhs;
    if (redundant)
      rows.erase(rows.begin() + i);
    else
      ++i;
  }
}

}  // namespace

Projection project_polyhedron(const std::vector<LinConstraint>& h, int dim,
                              const std::vector<int>& eliminate) {
  // Work over <= rows only.
  std::vector<LinConstraint> rows;
  for (const LinConstraint& c : h) {
    if (c.rel == Rel::LE) {
      rows.push_back(c);
    } else {
      rows.push_back({c.row, Rel::LE, c.rhs});
      rows.push_back({neg(c.row), Rel::LE, -c.rhs});
    }
  }

  std::vector<bool> gone(dim, false);
  for (int var : eliminate) {
    if (var < 0 || var >= dim || gone[var])
      throw domain_error("bad elimination variable");
    gone[var] = true;
    std::vector<LinConstraint> zero, pos, negrows;
    for (const LinConstraint& c : rows) {
      if (c.row[var] == 0)
        zero.push_back(c);
      else if (c.row[var] > 0)
        pos.push_back(c);
      else
        negrows.push_back(c);
    }
    std::vector<LinConstraint> next = zero;
    for (const LinConstraint& p : pos)
      for (const LinConstraint& q : negrows) {
        // Scale so the var cancels: q.row[var] * p - p.row[var] * q has a
        // positive combination since the signs differ.
        const Rat a = p.row[var];
        const Rat b = -q.row[var];
        LinConstraint comb;
        comb.rel = Rel::LE;
        comb.row = add(scale(b, p.row), scale(a, q.row));
        comb.rhs = b * p.rhs + a * q.rhs;
        if (is_zero(comb.row)) {
          if (comb.rhs < 0) {
            // Infeasible input: surface the contradiction and stop.
            Projection bad;
            for (int v = 0; v < dim; ++v)
              if (!gone[v]) bad.kept.push_back(v);
            LinConstraint impossible;
            impossible.row = zero_vec(static_cast<int>(bad.kept.size()));
            impossible.rel = Rel::LE;
            impossible.rhs = rat(-1);
            bad.constraints.push_back(impossible);
            return bad;
          }
          continue;  // trivially true
        }
        next.push_back(canonical_row(comb));
      }
    for (LinConstraint& c : next) c = canonical_row(c);
    dedupe_rows(next);
    prune_redundant(next, dim);
    rows = std::move(next);
  }

  Projection out;
  for (int v = 0; v < dim; ++v)
    if (!gone[v]) out.kept.push_back(v);
  for (const LinConstraint& c : rows) {
    LinConstraint slim;
    slim.rel = c.rel;
    slim.rhs = c.rhs;
    for (int v : out.kept) slim.row.push_back(c.row[v]);
    out.constraints.push_back(slim);
  }
  dedupe_rows(out.constraints);
  return out;
}

}  // namespace alphapoly
