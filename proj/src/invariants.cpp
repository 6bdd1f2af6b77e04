#include "alphapoly/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "alphapoly/linsolve.hpp"

namespace alphapoly {

namespace {

Rat det_abs(Matrix m) {
  const int n = static_cast<int>(m.size());
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int i = col; i < n; ++i)
      if (m[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) return Rat(0);
    if (pr != col) std::swap(m[pr], m[col]);
    det *= m[col][col];
    const Rat inv = Rat(1) / m[col][col];
    for (Rat& x : m[col]) x *= inv;
    for (int i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (int j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  if (det < 0) det = -det;
  return det;
}

Rat effective_value(const AlphaValue& a) { return a.capped ? Rat(1) : a.value; }

AlphaValue capped_alpha() {
  AlphaValue a;
  a.value = Rat(1);
  a.capped = true;
  a.witness.kind = "window";
  return a;
}

}  // namespace

CompactificationData make_compactification(const RootData& rd,
                                           const HPolytope& p, bool fano,
                                           const std::string& name) {
  if (rd.rank != p.rank) throw domain_error("root system / polytope rank mismatch");
  if (p.facets.empty()) throw domain_error("polytope without facets");
  CompactificationData d;
  d.roots = rd;
  d.polytope = p;
  d.fano = fano;
  d.name = name;
  d.vertices = dual_description(p);  // enforces bounded and solid
  if (!is_w_invariant(rd, p))
    throw invariance_error("polytope is not Weyl-invariant");
  d.anticanonical = anticanonical_coeffs(p, rd);
  if (fano) {
    for (std::size_t a = 0; a < p.facets.size(); ++a)
      if (p.facets[a].constant != d.anticanonical.coefficients[a])
        throw invariance_error(
            "fano flag inconsistent: facet constants differ from the "
            "anticanonical coefficients");
  }
  // Smoothness-style warning: every vertex should be simple and unimodular.
  for (const QVec& v : d.vertices.vertices) {
    Matrix active;
    for (std::size_t a = 0; a < p.facets.size(); ++a)
      if (facet_value(p, static_cast<int>(a), v) == 0)
        active.push_back(p.facets[a].normal);
    if (static_cast<int>(active.size()) != p.rank)
      d.warnings.push_back("vertex " + vec_string(v) + " is not simple");
    else if (det_abs(active) != 1)
      d.warnings.push_back("vertex " + vec_string(v) +
                           " has non-unimodular normals");
  }
  try {
    d.upsilon = upsilon_from_divisor(p, d.anticanonical);
  } catch (const domain_error&) {
    d.warnings.push_back(
        "anticanonical data is not linear on the normal fan; the geometric "
        "alpha route is unavailable");
  }
  d.chamber_hrep.dim = rd.rank;
  for (int i : rd.simple)
    d.chamber_hrep.ineqs.push_back(rd.positive[i].alpha);
  const ConeVRep cg = cone_generators(d.chamber_hrep);
  d.chamber.rank = rd.rank;
  d.chamber.generators = cg.rays;
  for (const QVec& l : cg.lineality) {
    d.chamber.generators.push_back(l);
    d.chamber.generators.push_back(neg(l));
  }
  std::sort(d.chamber.generators.begin(), d.chamber.generators.end(),
            lex_less);
  d.center_slice = slice_by_subspace(p, rd.center_dual);
  return d;
}

// ---------------------------------------------------------------------------
// Alpha along weight-set directions.

IntervalResult alpha_interval(
    const std::vector<std::pair<Rat, Rat>>& samples) {
  IntervalResult r;
  r.capped = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Rat& a = samples[i].first;
    const Rat& b = samples[i].second;
    if (a < 0) throw domain_error("negative direction gap");
    if (a == 0) {
      if (b >= 0) {
        // This direction forbids every positive alpha.
        r.empty = true;
        r.capped = false;
        r.argmin = static_cast<int>(i);
        return r;
      }
      continue;  // satisfied for all alpha
    }
    const Rat bound = -b / a;
    if (bound <= 0) {
      r.empty = true;
      r.capped = false;
      r.argmin = static_cast<int>(i);
      return r;
    }
    if (r.capped || bound < r.bound) {
      r.capped = false;
      r.bound = bound;
      r.argmin = static_cast<int>(i);
    }
  }
  return r;
}

namespace {

void validate_weights(const CompactificationData& d, long m,
                      const std::vector<QVec>& weights) {
  if (m < 1) throw domain_error("level must be >= 1");
  if (weights.empty()) throw domain_error("empty weight set");
  const Rat mm = rat(m);
  for (const QVec& w : weights) {
    if (static_cast<int>(w.size()) != d.polytope.rank)
      throw domain_error("weight of wrong length");
    if (!is_integer_vec(w))
      throw domain_error("weight is not a lattice point");
    if (!is_dominant(d.roots, w))
      throw domain_error("weight is not dominant");
    for (const Facet& f : d.polytope.facets)
      if (mm * f.constant + dot(f.normal, w) < 0)
        throw domain_error("weight lies outside the level-m polytope");
  }
}

}  // namespace

AlphaValue alpha_pi_general(const CompactificationData& data, long m,
                            const std::vector<QVec>& weights) {
  validate_weights(data, m, weights);
  if (data.upsilon.fan.cones.empty())
    throw domain_error("geometric route unavailable for this fan");
  const VPolytope ihat = orbit_hull(data.roots, weights);

  const Fan refined = common_refinement(
      {support_regions(data.vertices), support_regions(ihat)},
      data.chamber_hrep);

  std::vector<QVec> gens;
  for (const Cone& c : refined.cones)
    gens.insert(gens.end(), c.generators.begin(), c.generators.end());
  std::sort(gens.begin(), gens.end(), lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const Rat mm = rat(m);
  std::vector<std::pair<Rat, Rat>> samples;
  for (const QVec& g : gens) {
    const Rat a =
        support_value(data.vertices, g) - support_value(ihat, g) / mm;
    const Rat b =
        pl_evaluate(data.upsilon, neg(g)) + dot(data.roots.two_rho, g);
    samples.emplace_back(a, b);
  }
  const IntervalResult ir = alpha_interval(samples);

  AlphaValue out;
  if (ir.empty) {
    out.value = Rat(0);
    out.witness.kind = "empty";
    out.witness.point = gens[ir.argmin];
  } else if (ir.capped || ir.bound >= 1) {
    out = capped_alpha();
  } else {
    out.value = ir.bound;
    out.witness.kind = "cone-generator";
    out.witness.point = gens[ir.argmin];
  }
  return out;
}

AlphaValue alpha_pi_fano(const CompactificationData& data, long m,
                         const std::vector<QVec>& weights) {
  if (!data.fano)
    throw domain_error("the one-LP route requires the fano flag");
  validate_weights(data, m, weights);
  const VPolytope ihat = orbit_hull(data.roots, weights);
  const std::vector<QVec>& gens = dual_positive_cone(data.roots).generators;

  const int r = data.polytope.rank;
  const int q = static_cast<int>(ihat.vertices.size());
  const int t = static_cast<int>(gens.size());
  const Rat mm = rat(m);

  LinearProgram lp;
  lp.num_vars = r + q + t;
  // Membership of the translate variable in m*P.
  for (const Facet& f : data.polytope.facets) {
    LinConstraint c;
    c.rel = Rel::LE;
    c.rhs = mm * f.constant;
    c.row = zero_vec(lp.num_vars);
    for (int i = 0; i < r; ++i) c.row[i] = -f.normal[i];
    lp.constraints.push_back(std::move(c));
  }
  // p + sum eta_j (v_j - m*two_rho) - sum mu_k g_k == m*two_rho.
  for (int i = 0; i < r; ++i) {
    LinConstraint c;
    c.rel = Rel::EQ;
    c.rhs = mm * data.roots.two_rho[i];
    c.row = zero_vec(lp.num_vars);
    c.row[i] = Rat(1);
    for (int j = 0; j < q; ++j)
      c.row[r + j] = ihat.vertices[j][i] - mm * data.roots.two_rho[i];
    for (int kk = 0; kk < t; ++kk) c.row[r + q + kk] = -gens[kk][i];
    lp.constraints.push_back(std::move(c));
  }
  for (int j = 0; j < q + t; ++j) {
    LinConstraint c;
    c.rel = Rel::LE;
    c.rhs = Rat(0);
    c.row = zero_vec(lp.num_vars);
    c.row[r + j] = Rat(-1);
    lp.constraints.push_back(std::move(c));
  }
  lp.objective = zero_vec(lp.num_vars);
  for (int j = 0; j < q; ++j) lp.objective[r + j] = Rat(1);
  lp.sense = Sense::Maximize;

  const LPResult res = lp_solve(lp);
  if (res.status == LPStatus::Unbounded) return capped_alpha();
  if (res.status == LPStatus::Infeasible)
    throw domain_error("translate system infeasible; data inconsistent");
  AlphaValue out;
  if (res.value == 0) {
    out.value = Rat(0);
    out.witness.kind = "empty";
    return out;
  }
  out.value = res.value / (Rat(1) + res.value);
  out.witness.kind = "lp-point";
  QVec p(res.witness.begin(), res.witness.begin() + r);
  out.witness.point = std::move(p);
  return out;
}

// ---------------------------------------------------------------------------
// Minimum over admissible weight sets.

AlphaMkResult alpha_mk(const CompactificationData& data, long m, long k,
                       DimMode mode, int threads) {
  if (m < 1) throw domain_error("level must be >= 1");
  if (k < 1) throw domain_error("k must be >= 1");
  const std::vector<QVec> cands =
      dominant_points(data.roots, data.polytope, m);

  // Per-candidate sizes under the chosen accounting.
  std::vector<Int> size_of;
  for (const QVec& c : cands) {
    if (mode == DimMode::BlockCount) {
      size_of.push_back(1);
    } else {
      const Int dim = irrep_dimension(data.roots, c);
      size_of.push_back(dim * dim);
    }
  }
  const Int target(k);
  std::vector<int> pool;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (size_of[i] <= target) pool.push_back(static_cast<int>(i));

  auto eval_set = [&](const std::vector<int>& subset) {
    std::vector<QVec> ws;
    for (int i : subset) ws.push_back(cands[i]);
    return data.fano ? alpha_pi_fano(data, m, ws)
                     : alpha_pi_general(data, m, ws);
  };

  // Singleton values drive the pruning: any set containing a weight is at
  // least that weight's alpha (its orbit hull only grows).
  std::map<int, Rat> single_val;
  std::map<int, AlphaValue> single_alpha;
  for (int i : pool) {
    const AlphaValue a = eval_set({i});
    single_alpha[i] = a;
    single_val[i] = effective_value(a);
  }

  struct Best {
    bool has = false;
    Rat value;
    std::vector<int> subset;
    AlphaValue alpha;
  };
  Best best;
  std::mutex best_mutex;

  auto consider = [&](const std::vector<int>& subset, const AlphaValue& av) {
    const Rat v = effective_value(av);
    std::lock_guard<std::mutex> lock(best_mutex);
    if (!best.has || v < best.value ||
        (v == best.value && subset < best.subset)) {
      best.has = true;
      best.value = v;
      best.subset = subset;
      best.alpha = av;
    }
  };
  auto pruned = [&](int i) {
    std::lock_guard<std::mutex> lock(best_mutex);
    return best.has && single_val.at(i) > best.value;
  };

  // Depth-first over index-increasing subsets with exact total size k.
  auto dfs = [&](auto&& self, std::vector<int>& path, const Int& remaining,
                 int next_pos) -> void {
    if (remaining == 0) {
      const AlphaValue av = path.size() == 1 ? single_alpha.at(path[0])
                                             : eval_set(path);
      consider(path, av);
      return;
    }
    for (int pos = next_pos; pos < static_cast<int>(pool.size()); ++pos) {
      const int i = pool[pos];
      if (size_of[i] > remaining) continue;
      if (pruned(i)) continue;
      path.push_back(i);
      self(self, path, remaining - size_of[i], pos + 1);
      path.pop_back();
    }
  };

  const int nthreads =
      std::max(1, std::min<int>(threads, static_cast<int>(pool.size())));
  if (nthreads <= 1) {
    std::vector<int> path;
    dfs(dfs, path, target, 0);
  } else {
    std::atomic<int> next_first{0};
    auto worker = [&]() {
      for (;;) {
        const int pos = next_first.fetch_add(1);
        if (pos >= static_cast<int>(pool.size())) return;
        const int i = pool[pos];
        if (size_of[i] > target) continue;
        if (pruned(i)) continue;
        std::vector<int> path{i};
        dfs(dfs, path, target - size_of[i], pos + 1);
      }
    };
    std::vector<std::thread> ts;
    for (int i = 0; i < nthreads; ++i) ts.emplace_back(worker);
    for (std::thread& th : ts) th.join();
  }

  AlphaMkResult out;
  if (!best.has) {
    out.empty = true;
    return out;
  }
  out.alpha = best.alpha;
  for (int i : best.subset) out.minimizer.push_back(cands[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Group-symmetric alpha.

AlphaValue alpha_group(const CompactificationData& data) {
  const std::vector<QVec>& slice = data.center_slice.ambient_vertices;
  if (slice.empty()) {
    AlphaValue a = capped_alpha();
    return a;
  }
  Rat max_l(-1);
  QVec best_v;
  int best_a = -1;
  for (const QVec& v : slice)  // sorted: first maximal pair is the witness
    for (std::size_t a = 0; a < data.polytope.facets.size(); ++a) {
      const Rat l = facet_value(data.polytope, static_cast<int>(a), v);
      if (l > max_l) {
        max_l = l;
        best_v = v;
        best_a = static_cast<int>(a);
      }
    }
  AlphaValue out;
  if (max_l <= 0) return capped_alpha();
  out.witness.kind = "facet-vertex";
  out.witness.point = best_v;
  out.witness.facet = best_a + 1;
  if (max_l <= 1) {
    out.value = Rat(1);
    out.capped = true;
  } else {
    out.value = Rat(1) / max_l;
  }
  return out;
}

QuantizationResult quantization_m0(const CompactificationData& data) {
  const AlphaValue a = alpha_group(data);
  if (!a.witness.point)
    throw domain_error("group alpha has no vertex witness");
  QuantizationResult q;
  q.v_z0 = *a.witness.point;
  q.m0 = lcm_denominators(q.v_z0);
  q.alpha = a;
  return q;
}

AlphaValue alpha_group_delcroix(const CompactificationData& data) {
  if (!data.fano)
    throw domain_error("the erosion route requires the fano flag");
  const VPolytope h = orbit_hull(data.roots, {data.roots.two_rho});
  const HPolytope e = erode(data.polytope, h);
  const std::vector<QVec>& slice = data.center_slice.ambient_vertices;

  bool any = false;
  Rat best;
  QVec best_p, best_c;
  for (const QVec& p : data.vertices.vertices)
    for (const QVec& c : slice) {
      const QVec d = sub(p, c);
      if (is_zero(d)) continue;
      // Largest t >= 0 with t*d inside the eroded polytope.
      bool has_upper = false, infeasible = false;
      Rat upper, lower(0);
      for (const Facet& f : e.facets) {
        const Rat s = dot(f.normal, d);
        if (s == 0) {
          if (f.constant < 0) infeasible = true;
        } else if (s < 0) {
          const Rat u = f.constant / -s;
          if (!has_upper || u < upper) upper = u;
          has_upper = true;
        } else {
          const Rat l = -f.constant / s;
          if (l > lower) lower = l;
        }
      }
      Rat candidate;
      if (infeasible || (has_upper && upper < lower)) {
        candidate = Rat(0);  // no survival time at all
      } else if (!has_upper) {
        continue;  // direction never leaves the eroded polytope
      } else {
        candidate = upper;
      }
      if (!any || candidate < best) {  // loops sorted: first minimum wins
        any = true;
        best = candidate;
        best_p = p;
        best_c = c;
      }
    }

  if (!any) return capped_alpha();
  AlphaValue out;
  out.witness.kind = "pair";
  out.witness.point = best_p;
  out.witness.second = best_c;
  if (best <= 0) {
    out.value = Rat(0);
    out.witness.kind = "empty";
  } else if (best >= 1) {
    out.value = Rat(1);
    out.capped = true;
  } else {
    out.value = best;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Toric t-function machinery.

namespace {

void require_interior_origin(const HPolytope& p) {
  for (const Facet& f : p.facets)
    if (f.constant <= 0)
      throw domain_error("origin is not interior");
}

void require_toric_reflexive(const CompactificationData& data) {
  if (!data.roots.toric())
    throw domain_error("t-function machinery needs a toric datum");
  for (const Facet& f : data.polytope.facets)
    if (f.constant != 1)
      throw domain_error("polytope is not reflexive");
  for (const QVec& v : data.vertices.vertices)
    if (!is_integer_vec(v))
      throw domain_error("polytope is not reflexive");
}

}  // namespace

Rat t_function(const HPolytope& p, const QVec& x) {
  require_interior_origin(p);
  if (!hull_membership(x, p))
    throw domain_error("point outside the polytope");
  if (is_zero(x)) return Rat(1);
  bool has = false;
  Rat s;
  for (const Facet& f : p.facets) {
    const Rat u = dot(f.normal, x);
    if (u <= 0) continue;
    const Rat cand = f.constant / u;
    if (!has || cand < s) s = cand;
    has = true;
  }
  if (!has) throw domain_error("unbounded direction in the polytope");
  return s / (Rat(1) + s);
}

AlphaValue alpha_toric(const CompactificationData& data) {
  require_toric_reflexive(data);
  AlphaValue out;
  bool first = true;
  for (const QVec& v : data.vertices.vertices) {
    const Rat t = t_function(data.polytope, v);
    if (first || t < out.value) {
      out.value = t;
      out.witness.point = v;
      first = false;
    }
  }
  out.witness.kind = "vertex";
  return out;
}

SupT sup_t_on_hull(const HPolytope& p, const std::vector<QVec>& points) {
  require_interior_origin(p);
  if (points.empty()) throw domain_error("empty point list");
  for (const QVec& y : points)
    if (!hull_membership(y, p))
      throw domain_error("hull point outside the polytope");

  // Minimize c with  sum_j lambda_j u_a(v_j) <= c * constant_a,
  // lambda a convex combination, c >= 0.
  const int n = static_cast<int>(points.size());
  LinearProgram lp;
  lp.num_vars = n + 1;
  for (const Facet& f : p.facets) {
    LinConstraint c;
    c.rel = Rel::LE;
    c.rhs = Rat(0);
    for (const QVec& y : points) c.row.push_back(dot(f.normal, y));
    c.row.push_back(-f.constant);
    lp.constraints.push_back(std::move(c));
  }
  LinConstraint total;
  total.rel = Rel::EQ;
  total.rhs = Rat(1);
  total.row = QVec(n, Rat(1));
  total.row.push_back(Rat(0));
  lp.constraints.push_back(std::move(total));
  for (int j = 0; j <= n; ++j) {
    LinConstraint pos;
    pos.rel = Rel::LE;
    pos.rhs = Rat(0);
    pos.row = zero_vec(n + 1);
    pos.row[j] = Rat(-1);
    lp.constraints.push_back(std::move(pos));
  }
  lp.objective = zero_vec(n + 1);
  lp.objective[n] = Rat(1);
  lp.sense = Sense::Minimize;
  const LPResult res = lp_solve(lp);
  if (res.status != LPStatus::Optimal)
    throw domain_error("sup-t program did not solve");
  SupT out;
  out.value = Rat(1) / (Rat(1) + res.value);
  out.point = zero_vec(p.rank);
  for (int j = 0; j < n; ++j)
    out.point = add(out.point, scale(res.witness[j], points[j]));
  return out;
}

FaceSet min_face_set(const CompactificationData& data) {
  const AlphaValue alpha = alpha_toric(data);
  const HPolytope& p = data.polytope;
  const std::vector<QVec>& verts = data.vertices.vertices;
  const int nf = static_cast<int>(p.facets.size());

  std::vector<bool> attains;
  for (const QVec& v : verts)
    attains.push_back(t_function(p, v) == alpha.value);

  // Faces are exactly the vertex sets cut out by facet subsets.
  std::map<std::vector<QVec>, Face, bool (*)(const std::vector<QVec>&,
                                             const std::vector<QVec>&)>
      faces(lex_less_vecs);
  for (long mask = 1; mask < (1L << nf); ++mask) {
    std::vector<QVec> cut;
    for (std::size_t vi = 0; vi < verts.size(); ++vi) {
      bool on = true;
      for (int a = 0; a < nf && on; ++a)
        if (mask & (1L << a)) on = facet_value(p, a, verts[vi]) == 0;
      if (on) cut.push_back(verts[vi]);
    }
    if (cut.empty() || faces.count(cut)) continue;
    Face f;
    f.vertices = cut;
    for (int a = 0; a < nf; ++a) {
      bool contains = true;
      for (const QVec& v : cut)
        if (facet_value(p, a, v) != 0) {
          contains = false;
          break;
        }
      if (contains) f.facet_indices.push_back(a + 1);
    }
    Matrix diffs;
    for (std::size_t i = 1; i < cut.size(); ++i)
      diffs.push_back(sub(cut[i], cut[0]));
    f.dim = matrix_rank(diffs);
    f.is_facet = f.dim == p.rank - 1;
    faces.emplace(cut, std::move(f));
  }

  // A face minimizes when every vertex attains and the centroid attains
  // (constant alpha on the face, not just at its corners).
  std::vector<Face> qualifying;
  for (const auto& [cut, face] : faces) {
    bool all = true;
    for (const QVec& v : cut) {
      const auto it = std::find(verts.begin(), verts.end(), v);
      if (!attains[it - verts.begin()]) {
        all = false;
        break;
      }
    }
    if (!all) continue;
    QVec centroid = zero_vec(p.rank);
    for (const QVec& v : cut) centroid = add(centroid, v);
    centroid = scale(Rat(1) / Rat(static_cast<long>(cut.size())), centroid);
    if (t_function(p, centroid) != alpha.value) continue;
    qualifying.push_back(face);
  }

  // Keep the maximal faces under vertex-set inclusion.
  auto subset_of = [](const std::vector<QVec>& a, const std::vector<QVec>& b) {
    for (const QVec& v : a)
      if (std::find(b.begin(), b.end(), v) == b.end()) return false;
    return true;
  };
  FaceSet out;
  out.alpha = alpha.value;
  for (const Face& f : qualifying) {
    bool maximal = true;
    for (const Face& g : qualifying) {
      if (&f == &g || f.vertices == g.vertices) continue;
      if (subset_of(f.vertices, g.vertices)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.faces.push_back(f);
  }
  std::sort(out.faces.begin(), out.faces.end(),
            [](const Face& a, const Face& b) {
              if (a.dim != b.dim) return a.dim > b.dim;
              return lex_less_vecs(a.vertices, b.vertices);
            });
  return out;
}

ConjectureResult conjecture_check(const CompactificationData& data, long k,
                                  long max_m) {
  if (k < 1) throw domain_error("k must be >= 1");
  if (max_m < 1) throw domain_error("max level must be >= 1");
  const FaceSet fs = min_face_set(data);
  std::vector<const Face*> facet_faces;
  for (const Face& f : fs.faces)
    if (f.is_facet) facet_faces.push_back(&f);
  ConjectureResult out;
  if (facet_faces.empty()) {
    out.holds = false;
    out.note = "no facet in minimizing set";
    return out;
  }
  const long stop = std::max(max_m, k);
  for (long m = 1; m <= stop; ++m) {
    const std::vector<QVec> pts = lattice_points(data.polytope, m);
    const Rat mm = rat(m);
    for (const Face* f : facet_faces) {
      const int a = f->facet_indices.front() - 1;
      long count = 0;
      for (const QVec& y : pts)
        if (mm * data.polytope.facets[a].constant +
                dot(data.polytope.facets[a].normal, y) ==
            0)
          ++count;
      if (count >= k) {
        out.holds = true;
        out.m_k = m;
        out.facet = a + 1;
        return out;
      }
    }
  }
  out.holds = false;
  out.note = "count not reached up to the search bound";
  return out;
}

}  // namespace alphapoly
