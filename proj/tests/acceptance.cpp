// Acceptance gate: one pass/fail line per headline claim, checked with exact
// rational arithmetic against the bundled documents.  Exits nonzero if any
// criterion fails.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alphapoly/invariants.hpp"
#include "alphapoly/io.hpp"
#include "alphapoly/lp.hpp"

using namespace alphapoly;

namespace {

int failures = 0;

struct check_failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw check_failure{message};
}

void criterion(int n, const std::string& label,
               const std::function<void()>& body) {
  try {
    body();
    std::cout << "[PASS] criterion " << n << ": " << label << "\n";
  } catch (const check_failure& f) {
    ++failures;
    std::cout << "[FAIL] criterion " << n << ": " << label << " -- "
              << f.message << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "[FAIL] criterion " << n << ": " << label
              << " -- unexpected exception: " << e.what() << "\n";
  }
}

CompactificationData load(const std::string& name) {
  return compactification_from_document(
      parse_input_document(builtin_document(name)));
}

Rat effective(const AlphaValue& a) { return a.capped ? rat(1) : a.value; }

// Uniform small rational, numerator in [-9, 9], denominator in [1, 9].
Rat random_rat(std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return rat(num(gen), den(gen));
}

QVec random_vec(std::mt19937& gen, int rank) {
  QVec v;
  for (int i = 0; i < rank; ++i) v.push_back(random_rat(gen));
  return v;
}

void check_lp_witness(const LinearProgram& lp, const Rat& expected) {
  const LPResult res = lp_solve(lp);
  require(res.status == LPStatus::Optimal, "LP did not solve to optimality");
  require(res.value == expected, "LP value is off");
  require(dot(lp.objective, res.witness) == res.value,
          "LP witness does not reproduce the optimum");
  for (const LinConstraint& c : lp.constraints) {
    const Rat lhs = dot(c.row, res.witness);
    require(c.rel == Rel::EQ ? lhs == c.rhs : lhs <= c.rhs,
            "LP witness violates a constraint");
  }
}

}  // namespace

int main() {
  criterion(1,
            "gl2-toroidal: alpha 2/5 with facet-3 witness, m0 = 2, "
            "alpha_mk at levels 2 and 4",
            [] {
              const CompactificationData d = load("gl2-toroidal");
              const QVec vz{rat(-1, 2), rat(-1, 2)};

              const AlphaValue a = alpha_group(d);
              require(!a.capped && a.value == rat(2, 5), "alpha != 2/5");
              require(a.witness.facet && *a.witness.facet == 3,
                      "alpha witness facet != 3");
              require(a.witness.point && *a.witness.point == vz,
                      "alpha witness point != (-1/2, -1/2)");

              const QuantizationResult q = quantization_m0(d);
              require(q.m0 == 2, "m0 != 2");
              require(q.v_z0 == vz, "v_z0 != (-1/2, -1/2)");

              for (long m : {2L, 4L}) {
                const AlphaMkResult r =
                    alpha_mk(d, m, 1, DimMode::TrueDimension, 2);
                require(!r.empty && !r.alpha.capped &&
                            r.alpha.value == rat(2, 5),
                        "alpha_mk(m=" + std::to_string(m) + ", k=1) != 2/5");
              }
            });

  criterion(2,
            "cp1xcp1: toric alpha 1/2, all four facets minimize, "
            "lattice-count search holds for k = 1..5",
            [] {
              const CompactificationData d = load("cp1xcp1");
              require(alpha_toric(d).value == rat(1, 2), "toric alpha != 1/2");

              const FaceSet fs = min_face_set(d);
              require(fs.faces.size() == 4, "minimizing face count != 4");
              for (const Face& f : fs.faces)
                require(f.is_facet, "a minimizing face is not a facet");

              for (long k = 1; k <= 5; ++k) {
                const ConjectureResult c = conjecture_check(d, k, 10);
                require(c.holds,
                        "search failed at k = " + std::to_string(k));
                require(c.m_k <= (k + 1) / 2 + 1,
                        "m_k exceeds ceil(k/2) + 1 at k = " +
                            std::to_string(k));
                const AlphaMkResult r =
                    alpha_mk(d, c.m_k, k, DimMode::TrueDimension, 2);
                require(!r.empty && effective(r.alpha) == rat(1, 2),
                        "alpha_mk at (m_k, k) != 1/2 for k = " +
                            std::to_string(k));
              }
            });

  criterion(3,
            "cp2-blowup2: toric alpha 1/3 at (-1, -1), k = 2 search fails, "
            "pair minima exceed 1/3 and match the brute sweep",
            [] {
              const CompactificationData d = load("cp2-blowup2");
              const AlphaValue ta = alpha_toric(d);
              require(ta.value == rat(1, 3), "toric alpha != 1/3");
              require(ta.witness.point &&
                          *ta.witness.point == QVec{rat(-1), rat(-1)},
                      "toric witness != (-1, -1)");

              require(!conjecture_check(d, 2, 10).holds,
                      "k = 2 search unexpectedly holds");

              for (long m = 1; m <= 6; ++m) {
                const AlphaMkResult r =
                    alpha_mk(d, m, 2, DimMode::TrueDimension, 2);
                require(!r.empty, "alpha_mk(m, 2) empty at m = " +
                                      std::to_string(m));
                require(effective(r.alpha) > rat(1, 3),
                        "alpha_mk(m, 2) <= 1/3 at m = " + std::to_string(m));
                if (m == 1)
                  require(r.alpha.value == rat(1, 2),
                          "alpha_mk(1, 2) != 1/2");
              }

              // Independent oracle: sweep every pair of level-1 points.
              const std::vector<QVec> pts =
                  dominant_points(d.roots, d.polytope, 1);
              Rat best = rat(2);
              for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                  const Rat v = effective(
                      alpha_pi_general(d, 1, {pts[i], pts[j]}));
                  if (v < best) best = v;
                }
              require(best == rat(1, 2), "pair sweep minimum != 1/2");
            });

  criterion(4,
            "cp2/cp3: toric alpha 1/(n+1), minimizers are the vertices only, "
            "k = 2 search fails",
            [] {
              for (int n : {2, 3}) {
                const CompactificationData d = load("cp" + std::to_string(n));
                require(alpha_toric(d).value == rat(1, n + 1),
                        "toric alpha != 1/" + std::to_string(n + 1));
                const FaceSet fs = min_face_set(d);
                require(static_cast<int>(fs.faces.size()) == n + 1,
                        "minimizing face count != n + 1");
                for (const Face& f : fs.faces)
                  require(f.dim == 0 && f.vertices.size() == 1,
                          "a minimizing face is not a single vertex");
                require(!conjecture_check(d, 2, 10).holds,
                        "k = 2 search unexpectedly holds");
              }
            });

  criterion(5,
            "alpha_pi general and Fano routes agree on all dominant "
            "singletons and pairs at levels 1 and 2",
            [] {
              long instances = 0;
              for (const std::string name : {"gl2-toroidal", "cp2-blowup2"}) {
                const CompactificationData d = load(name);
                for (long m : {1L, 2L}) {
                  const std::vector<QVec> pts =
                      dominant_points(d.roots, d.polytope, m);
                  std::vector<std::vector<QVec>> sets;
                  for (const QVec& p : pts) sets.push_back({p});
                  for (std::size_t i = 0; i < pts.size(); ++i)
                    for (std::size_t j = i + 1; j < pts.size(); ++j)
                      sets.push_back({pts[i], pts[j]});
                  for (const std::vector<QVec>& s : sets) {
                    const AlphaValue g = alpha_pi_general(d, m, s);
                    const AlphaValue f = alpha_pi_fano(d, m, s);
                    require(g.value == f.value && g.capped == f.capped,
                            "routes disagree on " + name + " at m = " +
                                std::to_string(m));
                    ++instances;
                  }
                }
              }
              require(instances >= 30, "fewer than 30 instances compared");
            });

  criterion(6,
            "group alpha equals its erosion-route value on every bundled "
            "input",
            [] {
              for (const std::string& name : builtin_names()) {
                const CompactificationData d = load(name);
                const AlphaValue a = alpha_group(d);
                const AlphaValue b = alpha_group_delcroix(d);
                require(a.value == b.value && a.capped == b.capped,
                        "routes disagree on " + name);
              }
            });

  criterion(7,
            "property suite: support function laws, curvature identity, "
            "t boundary contact, orbit representatives, k-monotonicity, "
            "LP witnesses, dual-description roundtrip",
            [] {
              // Support function: positive homogeneity and subadditivity.
              std::mt19937 gen(20240816);
              for (const std::string& name : builtin_names()) {
                const CompactificationData d = load(name);
                const int rank = d.polytope.rank;
                for (int trial = 0; trial < 100; ++trial) {
                  const QVec x = random_vec(gen, rank);
                  const QVec y = random_vec(gen, rank);
                  const Rat lam = abs(random_rat(gen));
                  require(support_value(d.vertices, scale(lam, x)) ==
                              lam * support_value(d.vertices, x),
                          "support function is not homogeneous on " + name);
                  require(support_value(d.vertices, add(x, y)) <=
                              support_value(d.vertices, x) +
                                  support_value(d.vertices, y),
                          "support function is not subadditive on " + name);
                  // Curvature functional identity on the whole space.
                  require(pl_evaluate(d.upsilon, neg(x)) ==
                              -support_value(d.vertices, x),
                          "curvature identity fails on " + name);
                }
              }

              // Boundary contact: at a vertex v with t(v) = s/(1+s), the
              // scaled point -s v lies in the polytope and touches a facet.
              for (const std::string name :
                   {"cp1xcp1", "cp2-blowup2", "cp2", "cp3"}) {
                const CompactificationData d = load(name);
                for (const QVec& v : d.vertices.vertices) {
                  const Rat t = t_function(d.polytope, v);
                  require(t > 0 && t < 1, "vertex t outside (0, 1)");
                  const Rat s = t / (1 - t);
                  const QVec probe = scale(-s, v);
                  require(hull_membership(probe, d.polytope),
                          "boundary probe leaves the polytope on " + name);
                  Rat min_gap = rat(1);
                  bool first = true;
                  for (int a = 0;
                       a < static_cast<int>(d.polytope.facets.size()); ++a) {
                    const Rat g = facet_value(d.polytope, a, probe);
                    if (first || g < min_gap) min_gap = g;
                    first = false;
                  }
                  require(min_gap == 0,
                          "boundary probe misses the boundary on " + name);
                }
              }

              // Every lattice point has exactly one dominant representative.
              for (const std::string name : {"gl2-toroidal", "cp1xcp1"}) {
                const CompactificationData d = load(name);
                for (long m = 1; m <= 3; ++m)
                  for (const QVec& y : lattice_points(d.polytope, m)) {
                    int dominant = 0;
                    for (const QVec& w : weyl_orbit(d.roots, y))
                      if (is_dominant(d.roots, w)) ++dominant;
                    require(dominant == 1,
                            "orbit representative not unique on " + name);
                  }
              }

              // alpha_mk never drops as the weight budget k grows.
              {
                const CompactificationData d = load("cp2-blowup2");
                for (long m = 1; m <= 3; ++m) {
                  Rat prev = rat(0);
                  for (long k = 1; k <= 4; ++k) {
                    const AlphaMkResult r =
                        alpha_mk(d, m, k, DimMode::TrueDimension, 2);
                    if (r.empty) break;
                    require(effective(r.alpha) >= prev,
                            "alpha_mk dropped as k grew");
                    prev = effective(r.alpha);
                  }
                }
              }

              // LP witnesses satisfy every constraint exactly.
              {
                LinearProgram lp;
                lp.num_vars = 2;
                lp.sense = Sense::Maximize;
                lp.objective = {rat(1), rat(1)};
                lp.constraints = {{{rat(3), rat(2)}, Rel::LE, rat(4)},
                                  {{rat(1), rat(4)}, Rel::LE, rat(5)},
                                  {{rat(-1), rat(0)}, Rel::LE, rat(0)},
                                  {{rat(0), rat(-1)}, Rel::LE, rat(0)}};
                check_lp_witness(lp, rat(17, 10));

                LinearProgram eq;
                eq.num_vars = 2;
                eq.sense = Sense::Maximize;
                eq.objective = {rat(1), rat(0)};
                eq.constraints = {{{rat(1), rat(1)}, Rel::EQ, rat(3)},
                                  {{rat(1), rat(-1)}, Rel::LE, rat(1)},
                                  {{rat(-1), rat(0)}, Rel::LE, rat(0)}};
                check_lp_witness(eq, rat(2));

                LinearProgram beale;
                beale.num_vars = 4;
                beale.sense = Sense::Minimize;
                beale.objective = {rat(-3, 4), rat(150), rat(-1, 50), rat(6)};
                beale.constraints = {
                    {{rat(1, 4), rat(-60), rat(-1, 25), rat(9)}, Rel::LE,
                     rat(0)},
                    {{rat(1, 2), rat(-90), rat(-1, 50), rat(3)}, Rel::LE,
                     rat(0)},
                    {{rat(0), rat(0), rat(1), rat(0)}, Rel::LE, rat(1)},
                    {{rat(-1), rat(0), rat(0), rat(0)}, Rel::LE, rat(0)},
                    {{rat(0), rat(-1), rat(0), rat(0)}, Rel::LE, rat(0)},
                    {{rat(0), rat(0), rat(-1), rat(0)}, Rel::LE, rat(0)},
                    {{rat(0), rat(0), rat(0), rat(-1)}, Rel::LE, rat(0)}};
                check_lp_witness(beale, rat(-1, 20));
              }

              // Facet and vertex descriptions reproduce each other.
              for (const std::string& name : builtin_names()) {
                const CompactificationData d = load(name);
                const HPolytope h = dual_description(d.vertices);
                const VPolytope v = dual_description(h);
                require(v.vertices == d.vertices.vertices,
                        "vertex roundtrip fails on " + name);
                for (const QVec& p : v.vertices)
                  require(hull_membership(p, d.polytope),
                          "roundtrip vertex escapes the input on " + name);
                for (const Facet& f : h.facets) {
                  bool tight = false;
                  for (const QVec& p : v.vertices)
                    if (f.constant + dot(f.normal, p) == 0) tight = true;
                  require(tight, "roundtrip facet is slack on " + name);
                }
              }
            });

  criterion(8,
            "minimum of t over the step-1/12 grid matches toric alpha",
            [] {
              for (const std::string name :
                   {"cp1xcp1", "cp2-blowup2", "cp2", "cp3"}) {
                const CompactificationData d = load(name);
                const Rat expected = alpha_toric(d).value;
                Rat best = rat(1);
                for (const QVec& p : lattice_points(d.polytope, 12)) {
                  const Rat t = t_function(d.polytope, scale(rat(1, 12), p));
                  if (t < best) best = t;
                }
                require(best == expected, "grid minimum is off on " + name);
              }
            });

  if (failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << failures << " criterion(s) failed\n";
  return 1;
}
