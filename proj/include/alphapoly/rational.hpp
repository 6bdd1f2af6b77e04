// Exact rational scalar type and the error taxonomy shared by the library.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace alphapoly {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.  Every computation in the library is exact; no floating point.
using Rat = boost::multiprecision::mpq_rational;
// Arbitrary-precision integer.
using Int = boost::multiprecision::mpz_int;

// Precondition violations on otherwise well-formed data (CLI exit 4).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed input documents: missing keys, bad numbers, invalid root lists
// (CLI exit 2).
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Data that parses but is geometrically inconsistent: the polytope is not
// Weyl-invariant, or the declared Fano normalization fails (CLI exit 3).
struct invariance_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The mpq string and two-integer constructors store their arguments verbatim
// (no canonicalization; negative denominators misbehave).  Exact division
// always canonicalizes, so every rational is built through these helpers.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw domain_error("rational with zero denominator");
  return Rat(Int(num)) / Rat(Int(den));
}

// Parse "p", "-p", or "p/q" (arbitrary precision).  Throws schema_error on
// malformed text or a zero denominator.
Rat parse_rat(const std::string& text);

// Render in lowest terms as "p" or "p/q".
std::string rat_string(const Rat& q);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

}  // namespace alphapoly
