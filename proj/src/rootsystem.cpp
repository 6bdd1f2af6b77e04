#include "alphapoly/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "alphapoly/linsolve.hpp"

namespace alphapoly {

namespace {

QVec embedded(const QVec& block, int offset, int rank) {
  QVec v = zero_vec(rank);
  for (std::size_t i = 0; i < block.size(); ++i)
    v[offset + static_cast<int>(i)] = block[i];
  return v;
}

QVec coroot_of(const QVec& alpha) {
  const Rat len2 = dot(alpha, alpha);
  return scale(Rat(2) / len2, alpha);
}

struct BlockRoots {
  std::vector<QVec> positive;  // block coordinates
  int block_size = 0;
  Int weyl_order = 1;
};

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int pow2(int n) {
  Int p = 1;
  for (int i = 0; i < n; ++i) p *= 2;
  return p;
}

QVec unit(int n, int i, long s = 1) {
  QVec v = zero_vec(n);
  v[i] = rat(s);
  return v;
}

BlockRoots named_block(const std::string& type) {
  if (type.size() < 2) throw schema_error("bad root factor '" + type + "'");
  const char family = type[0];
  int n = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(type[i])))
      throw schema_error("bad root factor '" + type + "'");
    n = n * 10 + (type[i] - '0');
  }
  BlockRoots b;
  switch (family) {
    case 'A': {
      if (n < 1) throw schema_error("A factor needs rank >= 1");
      b.block_size = n + 1;
      for (int i = 0; i < n + 1; ++i)
        for (int j = i + 1; j < n + 1; ++j) {
          QVec v = unit(n + 1, i);
          v[j] = rat(-1);
          b.positive.push_back(v);
        }
      b.weyl_order = factorial(n + 1);
      break;
    }
    case 'B': {
      if (n < 2) throw schema_error("B factor needs rank >= 2");
      b.block_size = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          QVec v = unit(n, i);
          v[j] = rat(-1);
          b.positive.push_back(v);
          v[j] = rat(1);
          b.positive.push_back(v);
        }
      for (int i = 0; i < n; ++i) b.positive.push_back(unit(n, i));
      b.weyl_order = pow2(n) * factorial(n);
      break;
    }
    case 'C': {
      if (n < 2) throw schema_error("C factor needs rank >= 2");
      b.block_size = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          QVec v = unit(n, i);
          v[j] = rat(-1);
          b.positive.push_back(v);
          v[j] = rat(1);
          b.positive.push_back(v);
        }
      for (int i = 0; i < n; ++i) b.positive.push_back(unit(n, i, 2));
      b.weyl_order = pow2(n) * factorial(n);
      break;
    }
    case 'D': {
      if (n < 2) throw schema_error("D factor needs rank >= 2");
      b.block_size = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          QVec v = unit(n, i);
          v[j] = rat(-1);
          b.positive.push_back(v);
          v[j] = rat(1);
          b.positive.push_back(v);
        }
      b.weyl_order = pow2(n - 1) * factorial(n);
      break;
    }
    case 'G': {
      if (n != 2) throw schema_error("G factor must be G2");
      b.block_size = 3;
      // Short: permutation differences; long: +/- (2,-1,-1) patterns.
      const long shorts[3][3] = {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
      const long longs[3][3] = {{2, -1, -1}, {-1, 2, -1}, {1, 1, -2}};
      for (auto& s : shorts) {
        QVec v(3);
        for (int i = 0; i < 3; ++i) v[i] = rat(s[i]);
        b.positive.push_back(v);
      }
      for (auto& l : longs) {
        QVec v(3);
        for (int i = 0; i < 3; ++i) v[i] = rat(l[i]);
        b.positive.push_back(v);
      }
      b.weyl_order = 12;
      break;
    }
    default:
      throw schema_error("unknown root family '" + type + "'");
  }
  return b;
}

// Shared tail: simple roots, rho, center bases, validation of closure.
void finish_root_data(RootData& rd) {
  const int rank = rd.rank;
  // Indecomposable positives: not the sum of two positive roots.
  std::set<QVec, bool (*)(const QVec&, const QVec&)> sums(lex_less);
  for (const Root& a : rd.positive)
    for (const Root& b : rd.positive) sums.insert(add(a.alpha, b.alpha));
  for (std::size_t i = 0; i < rd.positive.size(); ++i)
    if (!sums.count(rd.positive[i].alpha))
      rd.simple.push_back(static_cast<int>(i));

  rd.rho = zero_vec(rank);
  for (const Root& r : rd.positive) rd.rho = add(rd.rho, r.alpha);
  rd.rho = scale(rat(1, 2), rd.rho);
  rd.two_rho = scale(rat(2), rd.rho);

  Matrix coroots, roots;
  for (const Root& r : rd.positive) {
    coroots.push_back(r.coroot);
    roots.push_back(r.alpha);
  }
  rd.center_dual = null_space(coroots, rank);
  rd.center_primal = null_space(roots, rank);

  // Simple roots must be independent, and every positive root a nonnegative
  // integer combination of them.
  Matrix simples;
  for (int i : rd.simple) simples.push_back(rd.positive[i].alpha);
  if (matrix_rank(simples) != static_cast<int>(simples.size()))
    throw schema_error("indecomposable roots are not independent");
  const Matrix cols = transpose(simples);
  for (const Root& r : rd.positive) {
    if (simples.empty()) throw schema_error("root system without simples");
    const auto coeffs = solve_linear(cols, r.alpha);
    if (!coeffs)
      throw schema_error("root not in the span of the indecomposables");
    for (const Rat& c : *coeffs)
      if (c < 0 || denominator(c) != 1)
        throw schema_error("root is not a nonnegative integer combination "
                           "of the indecomposables");
  }
}

}  // namespace

QVec reflect_weight(const Root& r, const QVec& y) {
  return sub(y, scale(dot(r.coroot, y), r.alpha));
}

QVec reflect_primal(const Root& r, const QVec& x) {
  return sub(x, scale(dot(r.alpha, x), r.coroot));
}

RootData build_root_data(int rank, const std::vector<RootFactor>& factors) {
  if (rank < 1) throw schema_error("rank must be >= 1");
  RootData rd;
  rd.rank = rank;
  std::vector<bool> used(rank, false);
  for (const RootFactor& f : factors) {
    const BlockRoots b = named_block(f.type);
    if (f.offset < 0 || f.offset + b.block_size > rank)
      throw schema_error("root factor block exceeds the rank");
    for (int i = f.offset; i < f.offset + b.block_size; ++i) {
      if (used[i])
        throw schema_error("overlapping root factor blocks");
      used[i] = true;
    }
    for (const QVec& block_alpha : b.positive) {
      Root r;
      r.alpha = embedded(block_alpha, f.offset, rank);
      r.coroot = coroot_of(r.alpha);
      rd.positive.push_back(r);
    }
    rd.weyl_order *= b.weyl_order;
  }
  finish_root_data(rd);
  return rd;
}

RootData build_root_data(int rank, const std::vector<QVec>& positive_roots) {
  if (rank < 1) throw schema_error("rank must be >= 1");
  RootData rd;
  rd.rank = rank;
  std::set<QVec, bool (*)(const QVec&, const QVec&)> seen(lex_less);
  for (const QVec& a : positive_roots) {
    if (static_cast<int>(a.size()) != rank)
      throw schema_error("root of wrong length");
    if (is_zero(a)) throw schema_error("zero root");
    if (seen.count(a)) throw schema_error("duplicate root");
    seen.insert(a);
    Root r;
    r.alpha = a;
    r.coroot = coroot_of(a);
    rd.positive.push_back(r);
  }
  for (const Root& r : rd.positive) {
    if (seen.count(neg(r.alpha)))
      throw schema_error("both signs of a root listed");
    if (seen.count(scale(rat(2), r.alpha)))
      throw schema_error("non-reduced root system");
  }
  // Crystallographic pairings and closure under every induced reflection.
  for (const Root& a : rd.positive)
    for (const Root& b : rd.positive) {
      const Rat pairing = dot(a.coroot, b.alpha);
      if (denominator(pairing) != 1)
        throw schema_error("non-integral Cartan pairing");
      const QVec refl = reflect_weight(a, b.alpha);
      if (!seen.count(refl) && !seen.count(neg(refl)))
        throw schema_error("root list is not closed under reflections");
    }
  // Explicit systems are small; the Weyl order is the orbit size of the
  // regular dominant element rho.
  finish_root_data(rd);
  rd.weyl_order = 1;  // recomputed below via the rho orbit
  if (!rd.positive.empty())
    rd.weyl_order = Int(weyl_orbit(rd, rd.rho).size());
  return rd;
}

std::vector<QVec> weyl_orbit(const RootData& rd, const QVec& y) {
  std::set<QVec, bool (*)(const QVec&, const QVec&)> orbit(lex_less);
  std::vector<QVec> queue{y};
  orbit.insert(y);
  while (!queue.empty()) {
    const QVec cur = queue.back();
    queue.pop_back();
    for (int i : rd.simple) {
      QVec img = reflect_weight(rd.positive[i], cur);
      if (orbit.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {orbit.begin(), orbit.end()};
}

VPolytope orbit_hull(const RootData& rd, const std::vector<QVec>& weights) {
  if (weights.empty()) throw domain_error("empty weight set");
  std::set<QVec, bool (*)(const QVec&, const QVec&)> pts(lex_less);
  for (const QVec& w : weights)
    for (const QVec& o : weyl_orbit(rd, w)) pts.insert(o);
  const std::vector<QVec> all(pts.begin(), pts.end());

  // Keep the extreme points: p is redundant iff it is a convex combination
  // of the others.
  VPolytope hull;
  hull.rank = rd.rank;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int k = static_cast<int>(all.size()) - 1;
    if (k == 0) {
      hull.vertices.push_back(all[i]);
      break;
    }
    std::vector<LinConstraint> rows;
    for (int c = 0; c < rd.rank; ++c) {
      LinConstraint eq;
      eq.rel = Rel::EQ;
      eq.rhs = all[i][c];
      for (std::size_t j = 0; j < all.size(); ++j)
        if (j != i) eq.row.push_back(all[j][c]);
      rows.push_back(eq);
    }
    LinConstraint total;
    total.rel = Rel::EQ;
    total.rhs = rat(1);
    total.row = QVec(k, Rat(1));
    rows.push_back(total);
    for (int j = 0; j < k; ++j) {
      LinConstraint pos;
      pos.row = zero_vec(k);
      pos.row[j] = -1;
      pos.rel = Rel::LE;
      pos.rhs = Rat(0);
      rows.push_back(pos);
    }
    if (!lp_feasible(k, rows)) hull.vertices.push_back(all[i]);
  }
  return hull;
}

bool is_w_invariant(const RootData& rd, const HPolytope& p) {
  auto facet_less = [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.constant < b.constant;
  };
  std::vector<Facet> canon = p.facets;
  std::sort(canon.begin(), canon.end(), facet_less);
  for (int i : rd.simple) {
    std::vector<Facet> mapped;
    for (const Facet& f : p.facets)
      mapped.push_back(
          canonical_facet(f.constant, reflect_primal(rd.positive[i], f.normal)));
    std::sort(mapped.begin(), mapped.end(), facet_less);
    for (std::size_t j = 0; j < canon.size(); ++j)
      if (mapped[j].normal != canon[j].normal ||
          mapped[j].constant != canon[j].constant)
        return false;
  }
  return true;
}

bool is_dominant(const RootData& rd, const QVec& y) {
  for (int i : rd.simple)
    if (dot(rd.positive[i].coroot, y) < 0) return false;
  return true;
}

std::vector<QVec> dominant_points(const RootData& rd, const HPolytope& p,
                                  long m) {
  std::vector<QVec> out;
  for (const QVec& pt : lattice_points(p, m))
    if (is_dominant(rd, pt)) out.push_back(pt);
  return out;
}

Int irrep_dimension(const RootData& rd, const QVec& lambda) {
  if (!is_dominant(rd, lambda))
    throw domain_error("weight is not dominant");
  Rat num(1), den(1);
  for (const Root& r : rd.positive) {
    num *= dot(add(lambda, rd.rho), r.coroot);
    den *= dot(rd.rho, r.coroot);
  }
  const Rat d = num / den;
  if (denominator(d) != 1)
    throw domain_error("dimension formula returned a non-integer");
  return numerator(d);
}

Cone dual_positive_cone(const RootData& rd) {
  Cone c;
  c.rank = rd.rank;
  for (int i : rd.simple)
    c.generators.push_back(primitive_integer(rd.positive[i].alpha));
  std::sort(c.generators.begin(), c.generators.end(), lex_less);
  c.generators.erase(
      std::unique(c.generators.begin(), c.generators.end()),
      c.generators.end());
  return c;
}

}  // namespace alphapoly
