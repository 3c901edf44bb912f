#include "cycsol/coefficient.hpp"

namespace cycsol {

namespace {

long long to_ll(const Integer& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("integer too large for modular reduction");
  return z.get_si();
}

}  // namespace

Coefficient Coefficient::zero_like(const Coefficient& kind_source) {
  switch (kind_source.kind()) {
    case CoeffKind::Integer:
      return integer(0);
    case CoeffKind::Rational:
      return rational(Rational(0));
    case CoeffKind::Mod:
      return mod(0, kind_source.as_mod().modulus);
    case CoeffKind::Poly:
      return poly(Polynomial());
  }
  throw std::logic_error("unreachable");
}

Coefficient Coefficient::one_like(const Coefficient& kind_source) {
  switch (kind_source.kind()) {
    case CoeffKind::Integer:
      return integer(1);
    case CoeffKind::Rational:
      return rational(Rational(1));
    case CoeffKind::Mod:
      return mod(1, kind_source.as_mod().modulus);
    case CoeffKind::Poly:
      return poly(Polynomial(1));
  }
  throw std::logic_error("unreachable");
}

bool Coefficient::is_zero() const {
  switch (kind()) {
    case CoeffKind::Integer:
      return as_integer() == 0;
    case CoeffKind::Rational:
      return as_rational() == 0;
    case CoeffKind::Mod:
      return as_mod().value == 0;
    case CoeffKind::Poly:
      return as_poly().is_zero();
  }
  throw std::logic_error("unreachable");
}

bool Coefficient::is_one() const {
  switch (kind()) {
    case CoeffKind::Integer:
      return as_integer() == 1;
    case CoeffKind::Rational:
      return as_rational() == 1;
    case CoeffKind::Mod:
      return as_mod().value == 1 % as_mod().modulus;
    case CoeffKind::Poly:
      return as_poly() == Polynomial(1);
  }
  throw std::logic_error("unreachable");
}

void Coefficient::align(Coefficient& a, Coefficient& b) {
  if (a.kind() == b.kind()) {
    if (a.kind() == CoeffKind::Mod &&
        a.as_mod().modulus != b.as_mod().modulus)
      throw CoefficientKindError("modulus mismatch");
    return;
  }
  // Integers embed canonically into every kind.
  auto lift = [](const Integer& z, const Coefficient& target) -> Coefficient {
    switch (target.kind()) {
      case CoeffKind::Rational:
        return rational(Rational(z));
      case CoeffKind::Mod:
        return mod(to_ll(z % Integer(static_cast<long>(target.as_mod().modulus))),
                   target.as_mod().modulus);
      case CoeffKind::Poly: {
        if (!z.fits_slong_p())
          throw std::overflow_error("integer too large for polynomial lift");
        return poly(Polynomial(z.get_si()));
      }
      case CoeffKind::Integer:
        break;
    }
    throw std::logic_error("unreachable");
  };
  if (a.kind() == CoeffKind::Integer) {
    a = lift(a.as_integer(), b);
    return;
  }
  if (b.kind() == CoeffKind::Integer) {
    b = lift(b.as_integer(), a);
    return;
  }
  throw CoefficientKindError("mixed coefficient kinds: " + a.kind_name() +
                             " with " + b.kind_name());
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  Coefficient a = *this, b = o;
  align(a, b);
  switch (a.kind()) {
    case CoeffKind::Integer:
      return integer(Integer(a.as_integer() + b.as_integer()));
    case CoeffKind::Rational:
      return rational(Rational(a.as_rational() + b.as_rational()));
    case CoeffKind::Mod:
      return mod(a.as_mod().value + b.as_mod().value, a.as_mod().modulus);
    case CoeffKind::Poly:
      return poly(a.as_poly() + b.as_poly());
  }
  throw std::logic_error("unreachable");
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  return *this + (-o);
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  Coefficient a = *this, b = o;
  align(a, b);
  switch (a.kind()) {
    case CoeffKind::Integer:
      return integer(Integer(a.as_integer() * b.as_integer()));
    case CoeffKind::Rational:
      return rational(Rational(a.as_rational() * b.as_rational()));
    case CoeffKind::Mod: {
      // Moduli here are small (they fit a machine word squared comfortably for
      // every supported use); guard anyway.
      unsigned long long prod =
          static_cast<unsigned long long>(a.as_mod().value) *
          static_cast<unsigned long long>(b.as_mod().value);
      return mod(static_cast<long long>(
                     prod % static_cast<unsigned long long>(a.as_mod().modulus)),
                 a.as_mod().modulus);
    }
    case CoeffKind::Poly:
      return poly(a.as_poly() * b.as_poly());
  }
  throw std::logic_error("unreachable");
}

Coefficient Coefficient::operator-() const {
  switch (kind()) {
    case CoeffKind::Integer:
      return integer(Integer(-as_integer()));
    case CoeffKind::Rational:
      return rational(Rational(-as_rational()));
    case CoeffKind::Mod:
      return mod(-as_mod().value, as_mod().modulus);
    case CoeffKind::Poly:
      return poly(-as_poly());
  }
  throw std::logic_error("unreachable");
}

bool Coefficient::operator==(const Coefficient& o) const {
  Coefficient a = *this, b = o;
  try {
    align(a, b);
  } catch (const CoefficientKindError&) {
    return false;
  }
  switch (a.kind()) {
    case CoeffKind::Integer:
      return a.as_integer() == b.as_integer();
    case CoeffKind::Rational:
      return a.as_rational() == b.as_rational();
    case CoeffKind::Mod:
      return a.as_mod() == b.as_mod();
    case CoeffKind::Poly:
      return a.as_poly() == b.as_poly();
  }
  throw std::logic_error("unreachable");
}

std::string Coefficient::to_string() const {
  switch (kind()) {
    case CoeffKind::Integer:
      return cycsol::to_string(as_integer());
    case CoeffKind::Rational:
      return cycsol::to_string(as_rational());
    case CoeffKind::Mod:
      return std::to_string(as_mod().value) + " mod " +
             std::to_string(as_mod().modulus);
    case CoeffKind::Poly:
      return as_poly().to_string();
  }
  throw std::logic_error("unreachable");
}

std::string Coefficient::kind_name() const {
  switch (kind()) {
    case CoeffKind::Integer:
      return "integer";
    case CoeffKind::Rational:
      return "rational";
    case CoeffKind::Mod:
      return "mod";
    case CoeffKind::Poly:
      return "poly";
  }
  throw std::logic_error("unreachable");
}

Coefficient Coefficient::evaluate(const Polynomial& p, const Coefficient& at) {
  Coefficient acc = zero_like(at);
  const auto& coeffs = p.coeffs();
  for (size_t i = coeffs.size(); i-- > 0;)
    acc = acc * at + Coefficient(coeffs[i]);
  return acc;
}

}  // namespace cycsol
