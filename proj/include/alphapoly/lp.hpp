// Exact rational linear programming: two-phase simplex with Bland's rule.
#pragma once

#include <vector>

#include "alphapoly/vec.hpp"

namespace alphapoly {

enum class Rel { LE, EQ };

// row . x <= rhs   or   row . x == rhs.  Variables are free; nonnegativity
// must be stated as an explicit constraint.
struct LinConstraint {
  QVec row;
  Rel rel = Rel::LE;
  Rat rhs;
};

enum class Sense { Minimize, Maximize };

struct LinearProgram {
  int num_vars = 0;
  std::vector<LinConstraint> constraints;
  QVec objective;  // size num_vars
  Sense sense = Sense::Maximize;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

// value and witness are meaningful only when status == Optimal; the witness
// is an exact optimal point (Bland's rule makes it deterministic).
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value;
  QVec witness;
};

LPResult lp_solve(const LinearProgram& lp);

// Convenience: is {x : constraints} nonempty?
bool lp_feasible(int num_vars, const std::vector<LinConstraint>& constraints);

}  // namespace alphapoly
