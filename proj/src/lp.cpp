#include "alphapoly/lp.hpp"

namespace alphapoly {

namespace {

// Dense exact tableau.  Internally always a minimization over nonnegative
// variables; free variables are split x = x+ - x- by the driver below.
// Bland's rule (least-index entering, least-basic-index ratio ties) rules
// out cycling, so termination is unconditional.
struct Tableau {
  int cols = 0;                 // data columns, excluding the rhs
  std::vector<QVec> rows;      // each of size cols + 1 (rhs last)
  std::vector<int> basis;      // basis[i] = basic column of row i
  QVec cost;                   // size cols + 1; last entry = -objective value
  std::vector<bool> banned;    // columns never allowed to enter

  void pivot(int pr, int pc) {
    const Rat inv = Rat(1) / rows[pr][pc];
    for (Rat& x : rows[pr]) x *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == pr || rows[i][pc] == 0) continue;
      const Rat f = rows[i][pc];
      for (int j = 0; j <= cols; ++j) rows[i][j] -= f * rows[pr][j];
    }
    if (cost[pc] != 0) {
      const Rat f = cost[pc];
      for (int j = 0; j <= cols; ++j) cost[j] -= f * rows[pr][j];
    }
    basis[pr] = pc;
  }

  // Subtract basic-row multiples so reduced costs of basic columns vanish.
  void canonicalize_cost(const QVec& raw) {
    cost = raw;
    cost.push_back(Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (cost[basis[i]] == 0) continue;
      const Rat f = cost[basis[i]];
      for (int j = 0; j <= cols; ++j) cost[j] -= f * rows[i][j];
    }
  }

  // true on optimal, false on unbounded.
  bool run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j)
        if (!banned[j] && cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i][enter] <= 0) continue;
        const Rat ratio = rows[i][cols] / rows[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rat objective_value() const { return -cost[cols]; }
};

}  // namespace

LPResult lp_solve(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (static_cast<int>(lp.objective.size()) != n)
    throw domain_error("objective size mismatch");
  for (const LinConstraint& c : lp.constraints)
    if (static_cast<int>(c.row.size()) != n)
      throw domain_error("constraint size mismatch");

  // No variables: the program is a pure feasibility statement.
  if (n == 0) {
    for (const LinConstraint& c : lp.constraints) {
      const bool ok = c.rel == Rel::LE ? (Rat(0) <= c.rhs) : (Rat(0) == c.rhs);
      if (!ok) return {LPStatus::Infeasible, Rat(0), {}};
    }
    return {LPStatus::Optimal, Rat(0), {}};
  }

  const int m = static_cast<int>(lp.constraints.size());
  int num_slack = 0;
  for (const LinConstraint& c : lp.constraints)
    if (c.rel == Rel::LE) ++num_slack;

  // Columns: 2n split vars, then slacks, then artificials (added on demand).
  const int split = 2 * n;
  const int slack0 = split;
  const int art0 = slack0 + num_slack;

  Tableau t;
  t.cols = art0;  // artificials appended below
  t.rows.assign(m, QVec());
  t.basis.assign(m, -1);
  std::vector<int> art_rows;
  int slack_idx = 0;
  for (int i = 0; i < m; ++i) {
    const LinConstraint& c = lp.constraints[i];
    QVec row = zero_vec(art0 + 1);
    for (int j = 0; j < n; ++j) {
      row[j] = c.row[j];
      row[n + j] = -c.row[j];
    }
    int scol = -1;
    if (c.rel == Rel::LE) {
      scol = slack0 + slack_idx++;
      row[scol] = 1;
    }
    row[art0] = c.rhs;
    if (row[art0] < 0)
      for (Rat& x : row) x = -x;
    // rhs now sits at index art0; move it to the very end after artificials
    // are appended, so keep rows provisional and record metadata.
    t.rows[i] = std::move(row);
    if (scol >= 0 && t.rows[i][scol] == 1) {
      t.basis[i] = scol;
    } else {
      art_rows.push_back(i);
    }
  }

  const int num_art = static_cast<int>(art_rows.size());
  t.cols = art0 + num_art;
  for (int i = 0; i < m; ++i) {
    QVec& row = t.rows[i];
    const Rat rhs = row[art0];
    row.resize(t.cols + 1);
    row[art0] = 0;  // clear first: with no artificials this slot IS the end
    row[t.cols] = rhs;
  }
  for (int k = 0; k < num_art; ++k) {
    const int i = art_rows[k];
    t.rows[i][art0 + k] = 1;
    t.basis[i] = art0 + k;
  }
  t.banned.assign(t.cols, false);

  // Phase 1: minimize the artificial sum.
  if (num_art > 0) {
    QVec phase1 = zero_vec(t.cols);
    for (int k = 0; k < num_art; ++k) phase1[art0 + k] = 1;
    t.canonicalize_cost(phase1);
    t.run();  // bounded below by 0, can't be unbounded
    if (t.objective_value() != 0)
      return {LPStatus::Infeasible, Rat(0), {}};
    // Drive surviving artificials out of the basis; a row where that is
    // impossible is a redundant equality and gets dropped.
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
      if (t.basis[i] < art0) continue;
      int pc = -1;
      for (int j = 0; j < art0; ++j)
        if (t.rows[i][j] != 0) {
          pc = j;
          break;
        }
      if (pc >= 0) {
        t.pivot(i, pc);
      } else {
        t.rows.erase(t.rows.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
    for (int k = 0; k < num_art; ++k) t.banned[art0 + k] = true;
  }

  // Phase 2 on the original objective (internally minimized).
  QVec phase2 = zero_vec(t.cols);
  for (int j = 0; j < n; ++j) {
    const Rat cj =
        lp.sense == Sense::Maximize ? -lp.objective[j] : lp.objective[j];
    phase2[j] = cj;
    phase2[n + j] = -cj;
  }
  t.canonicalize_cost(phase2);
  if (!t.run()) return {LPStatus::Unbounded, Rat(0), {}};

  QVec y = zero_vec(t.cols);
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    y[t.basis[i]] = t.rows[i][t.cols];
  QVec x(n);
  for (int j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  Rat value = t.objective_value();
  if (lp.sense == Sense::Maximize) value = -value;
  return {LPStatus::Optimal, value, x};
}

bool lp_feasible(int num_vars, const std::vector<LinConstraint>& constraints) {
  LinearProgram lp;
  lp.num_vars = num_vars;
  lp.constraints = constraints;
  lp.objective = zero_vec(num_vars);
  lp.sense = Sense::Minimize;
  return lp_solve(lp).status == LPStatus::Optimal;
}

}  // namespace alphapoly
