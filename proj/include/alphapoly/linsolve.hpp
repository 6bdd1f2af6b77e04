// Exact Gaussian elimination: unique solve, rank, null spaces, affine
// solution sets.
#pragma once

#include <optional>
#include <vector>

#include "alphapoly/vec.hpp"

namespace alphapoly {

// Unique solution of A x = b, or nullopt when the system is inconsistent or
// underdetermined.  A may be rectangular.
std::optional<QVec> solve_linear(const Matrix& a, const QVec& b);

int matrix_rank(const Matrix& a);

// Deterministic basis of {x : A x = 0}; each vector is scaled to coprime
// integers.  ncols is required because A may have no rows.
std::vector<QVec> null_space(const Matrix& a, int ncols);

// Full solution set of A x = b: one particular solution plus a basis of the
// homogeneous directions.  nullopt iff inconsistent.
struct AffineSolution {
  QVec particular;
  std::vector<QVec> directions;
};
std::optional<AffineSolution> solve_affine(const Matrix& a, const QVec& b);

}  // namespace alphapoly
