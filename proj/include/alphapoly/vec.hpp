// Dense rational vectors and matrices with the handful of operations the
// geometry kernel needs.
#pragma once

#include <string>
#include <vector>

#include "alphapoly/rational.hpp"

namespace alphapoly {

using QVec = std::vector<Rat>;
using Matrix = std::vector<QVec>;  // row-major

Rat dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec neg(const QVec& a);
QVec scale(const Rat& c, const QVec& a);
bool is_zero(const QVec& a);
QVec zero_vec(int n);

// Strict lexicographic order; the tie-break order used everywhere a witness
// has to be deterministic.
bool lex_less(const QVec& a, const QVec& b);
bool lex_less_vecs(const std::vector<QVec>& a, const std::vector<QVec>& b);

// Positive rescaling to coprime integer entries; the zero vector is returned
// unchanged.  Direction is preserved.
QVec primitive_integer(const QVec& a);

// Least common multiple of the entry denominators (1 for an integer vector).
Int lcm_denominators(const QVec& a);

bool is_integer_vec(const QVec& a);

// "(a, b, c)" with entries in lowest terms.
std::string vec_string(const QVec& a);

Matrix transpose(const Matrix& m);
QVec mat_vec(const Matrix& m, const QVec& x);  // rows . x

}  // namespace alphapoly
