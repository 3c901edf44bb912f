#pragma once

// A coefficient drawn from one of the rings the algebra is defined over:
// arbitrary-precision integers, exact rationals, integers modulo m (m >= 2),
// or integer polynomials in the generic parameter x.  Arithmetic stays inside
// one kind; integers embed into every other kind, all other mixtures are
// rejected.  No floating point is involved anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "cycsol/polynomial.hpp"
#include "cycsol/rational.hpp"

namespace cycsol {

enum class CoeffKind { Integer, Rational, Mod, Poly };

struct CoefficientKindError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Residue v mod m, normalized to [0, m).
struct ModInt {
  long long value = 0;
  long long modulus = 2;

  ModInt() = default;
  ModInt(long long v, long long m) : modulus(m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    value = v % m;
    if (value < 0) value += m;
  }
  bool operator==(const ModInt& o) const = default;
};

class Coefficient {
 public:
  Coefficient() : v_(Integer(0)) {}  // integer zero
  explicit Coefficient(long long v) : v_(Integer(static_cast<long>(v))) {}

  static Coefficient integer(Integer v) { return Coefficient(Repr(std::move(v))); }
  static Coefficient integer(long long v) { return Coefficient(v); }
  static Coefficient rational(Rational v) {
    return Coefficient(Repr(std::move(v)));
  }
  static Coefficient mod(long long v, long long m) {
    return Coefficient(Repr(ModInt(v, m)));
  }
  static Coefficient poly(Polynomial p) { return Coefficient(Repr(std::move(p))); }
  static Coefficient symbol_x() { return poly(Polynomial::x()); }
  static Coefficient zero_like(const Coefficient& kind_source);
  static Coefficient one_like(const Coefficient& kind_source);

  CoeffKind kind() const {
    return static_cast<CoeffKind>(v_.index());
  }
  bool is_zero() const;
  bool is_one() const;

  const Integer& as_integer() const { return std::get<Integer>(v_); }
  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const ModInt& as_mod() const { return std::get<ModInt>(v_); }
  const Polynomial& as_poly() const { return std::get<Polynomial>(v_); }

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  bool operator==(const Coefficient& o) const;
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  std::string to_string() const;
  std::string kind_name() const;

  // Horner evaluation of p at this coefficient, in this coefficient's kind.
  static Coefficient evaluate(const Polynomial& p, const Coefficient& at);

 private:
  using Repr = std::variant<Integer, Rational, ModInt, Polynomial>;
  explicit Coefficient(Repr v) : v_(std::move(v)) {}

  // Lifts integers into the other operand's kind; rejects other mixtures.
  static void align(Coefficient& a, Coefficient& b);

  Repr v_;
};

}  // namespace cycsol
