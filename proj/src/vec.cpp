#include "alphapoly/vec.hpp"

#include <algorithm>
#include <sstream>

namespace alphapoly {

namespace {

void check_same_size(const QVec& a, const QVec& b) {
  if (a.size() != b.size())
    throw domain_error("vector size mismatch");
}

}  // namespace

Rat dot(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  check_same_size(a, b);
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec neg(const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const QVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

QVec zero_vec(int n) { return QVec(static_cast<std::size_t>(n)); }

bool lex_less(const QVec& a, const QVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less_vecs(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      lex_less);
}

Int lcm_denominators(const QVec& a) {
  Int l = 1;
  for (const Rat& x : a) l = lcm(l, denominator(x));
  return l;
}

bool is_integer_vec(const QVec& a) {
  for (const Rat& x : a)
    if (denominator(x) != 1) return false;
  return true;
}

QVec primitive_integer(const QVec& a) {
  if (is_zero(a)) return a;
  const Int l = lcm_denominators(a);
  Int g = 0;
  for (const Rat& x : a) g = gcd(g, numerator(x) * (l / denominator(x)));
  if (g < 0) g = -g;
  QVec r(a.size());
  const Rat factor = Rat(l) / Rat(g);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * factor;
  return r;
}

std::string vec_string(const QVec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << rat_string(a[i]);
  }
  os << ')';
  return os.str();
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

QVec mat_vec(const Matrix& m, const QVec& x) {
  QVec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
  return r;
}

}  // namespace alphapoly
