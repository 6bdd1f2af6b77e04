// The invariants themselves: alpha along weight-set directions (two
// independent routes), the Grassmannian-style minimum over admissible weight
// sets, the group-symmetric alpha (two independent routes), the toric
// t-function with its minimizing face set, and the lattice-count check on
// minimizing facets.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphapoly/plfunc.hpp"

namespace alphapoly {

// Validated bundle of a root system with a Weyl-invariant polarized polytope;
// everything downstream of parsing works off this immutable value.
struct CompactificationData {
  RootData roots;
  HPolytope polytope;
  bool fano = false;
  std::string name;
  std::vector<std::string> warnings;

  // Derived once at construction.
  VPolytope vertices;
  DivisorData anticanonical;
  PLFunction upsilon;      // curvature PL function of the anticanonical divisor
  ConeHRep chamber_hrep;   // {x : <simple root, x> >= 0}
  Cone chamber;
  Slice center_slice;      // polytope cut by the dual central subspace
};

// Throws invariance_error when p is not Weyl-invariant, or when fano is set
// but the facet data is not the anticanonical normalization with interior 0.
CompactificationData make_compactification(const RootData& rd,
                                           const HPolytope& p, bool fano,
                                           const std::string& name);

// ---------------------------------------------------------------------------
// Alpha values.

struct AlphaWitness {
  std::string kind;  // "cone-generator", "facet-vertex", "vertex", "pair",
                     // "lp-point", "window", "empty"
  std::optional<QVec> point;
  std::optional<QVec> second;
  std::optional<int> facet;  // 1-based facet index
};

// value lies in (0, 1]; value 0 with kind "empty" is the sentinel for an
// empty admissible interval (no positive alpha works).  capped means the
// data imposed no bound below 1, so the open-interval supremum is 1.
struct AlphaValue {
  Rat value;
  bool capped = false;
  AlphaWitness witness;
};

// Alpha along the directions of the weight set I at level m (weights must be
// dominant lattice points of m*P).  Geometric route: refine the
// max-attainment fans of m*P and of the orbit hull of I over the dominant
// chamber, then bound alpha at every cone generator.
AlphaValue alpha_pi_general(const CompactificationData& data, long m,
                            const std::vector<QVec>& weights);

// Same value by one exact LP (requires the fano flag): maximize the total
// orbit-hull coefficient s subject to the translated-polytope membership;
// alpha = s/(1+s), unbounded means capped.
AlphaValue alpha_pi_fano(const CompactificationData& data, long m,
                         const std::vector<QVec>& weights);

// ---------------------------------------------------------------------------
// Minimum over admissible weight sets.

enum class DimMode {
  BlockCount,     // each weight counts 1
  TrueDimension,  // each weight counts (dim V_lambda)^2
};

struct AlphaMkResult {
  bool empty = false;  // no admissible weight set of total size k
  AlphaValue alpha;
  std::vector<QVec> minimizer;  // lexicographically least optimal weight set
};

// Minimum of alpha_pi over subsets of the dominant lattice points of m*P
// whose sizes sum to exactly k.  Route through the LP when the data is fano,
// the geometric route otherwise.  threads <= 1 runs sequentially; results
// are deterministic either way.
AlphaMkResult alpha_mk(const CompactificationData& data, long m, long k,
                       DimMode mode = DimMode::TrueDimension, int threads = 1);

// ---------------------------------------------------------------------------
// Group-symmetric alpha.

// min over (facet a, vertex v of the central slice) of 1/facet_value,
// capped at 1.  Witness: lexicographically least attaining vertex, then the
// least facet index attaining at it.
AlphaValue alpha_group(const CompactificationData& data);

// Independent route (requires fano): erode the polytope by the orbit hull of
// 2*rho, then take the least survival time of p - c over vertex pairs
// (p from the polytope, c from the central slice).
AlphaValue alpha_group_delcroix(const CompactificationData& data);

// Least level at which the group alpha is realized by a lattice weight:
// m0 = lcm of the denominators of the witness vertex.
struct QuantizationResult {
  Int m0;
  QVec v_z0;
  AlphaValue alpha;
};
QuantizationResult quantization_m0(const CompactificationData& data);

// ---------------------------------------------------------------------------
// Toric t-function machinery (requires a toric reflexive datum).

// t(x) = s/(1+s) with s = sup {u >= 0 : -u x stays in P}; t(0) = 1.
// Requires 0 interior and x in P.
Rat t_function(const HPolytope& p, const QVec& x);

// min of t over the vertices; witness is the least attaining vertex.
AlphaValue alpha_toric(const CompactificationData& data);

// sup of t over the convex hull of the given points (all inside P), by one
// exact LP; point is an attaining hull point.
struct SupT {
  Rat value;
  QVec point;
};
SupT sup_t_on_hull(const HPolytope& p, const std::vector<QVec>& points);

// Faces of P on which t is identically alpha_toric: every vertex attains and
// the face centroid attains (the centroid test rejects faces that merely
// have attaining corners).  Only maximal such faces are kept.
struct Face {
  std::vector<QVec> vertices;
  int dim = 0;
  std::vector<int> facet_indices;  // 1-based facets containing the face
  bool is_facet = false;
};
struct FaceSet {
  Rat alpha;
  std::vector<Face> faces;
};
FaceSet min_face_set(const CompactificationData& data);

// Is there a facet in the minimizing face set, and if so the least level m
// at which that facet holds at least k lattice points of m*P.  When no facet
// minimizes, no level works and holds=false.
struct ConjectureResult {
  bool holds = false;
  long m_k = 0;        // meaningful when holds
  int facet = 0;       // 1-based witness facet when holds
  std::string note;
};
ConjectureResult conjecture_check(const CompactificationData& data, long k,
                                  long max_m);

// ---------------------------------------------------------------------------
// Exposed for direct testing: the interval intersection behind the
// geometric alpha route.  Each sample contributes {alpha in (0,1) :
// alpha * a <= -b}; returns the supremum bound and flags.
struct IntervalResult {
  bool empty = false;   // some sample forbids every positive alpha
  bool capped = false;  // no sample bounds alpha below 1
  Rat bound;            // least upper bound when not capped/empty
  int argmin = -1;      // index of the binding sample
};
IntervalResult alpha_interval(const std::vector<std::pair<Rat, Rat>>& samples);

}  // namespace alphapoly
