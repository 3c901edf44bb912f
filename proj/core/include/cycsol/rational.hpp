#pragma once

// Exact arithmetic foundations: arbitrary-precision integers and rationals.
// All computation in this library is exact; no floating point is used anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cycsol {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms.  mpq_class does not canonicalize on its own.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Renders "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + text);
  q.canonicalize();
  return q;
}

}  // namespace cycsol
