#include "alphapoly/linsolve.hpp"

namespace alphapoly {

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// surviving row.  First-nonzero pivoting keeps everything exact and
// deterministic.
std::vector<int> rref(Matrix& m, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < ncols && row < static_cast<int>(m.size()); ++col) {
    int pr = -1;
    for (int i = row; i < static_cast<int>(m.size()); ++i)
      if (m[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    const Rat inv = Rat(1) / m[row][col];
    for (Rat& x : m[row]) x *= inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j)
        m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(const Matrix& a) {
  if (a.empty()) return 0;
  Matrix m = a;
  return static_cast<int>(rref(m, static_cast<int>(a[0].size())).size());
}

std::vector<QVec> null_space(const Matrix& a, int ncols) {
  Matrix m = a;
  const std::vector<int> pivots = m.empty()
                                      ? std::vector<int>{}
                                      : rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v = zero_vec(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free];
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const QVec& b) {
  if (a.size() != b.size()) throw domain_error("system size mismatch");
  const int ncols = a.empty() ? 0 : static_cast<int>(a[0].size());
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const std::vector<int> pivots = aug.empty()
                                      ? std::vector<int>{}
                                      : rref(aug, ncols + 1);
  // A pivot in the right-hand column means 0 = 1: inconsistent.
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  AffineSolution sol;
  sol.particular = zero_vec(ncols);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    sol.particular[pivots[r]] = aug[r][ncols];
  Matrix hom = a;
  sol.directions = null_space(hom, ncols);
  return sol;
}

std::optional<QVec> solve_linear(const Matrix& a, const QVec& b) {
  const auto sol = solve_affine(a, b);
  if (!sol || !sol->directions.empty()) return std::nullopt;
  return sol->particular;
}

}  // namespace alphapoly
