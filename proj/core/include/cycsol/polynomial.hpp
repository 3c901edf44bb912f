#pragma once

// Univariate polynomials in x with integer coefficients, stored densely in
// ascending degree order.  These carry the structure constants of the generic
// algebra: every constant that arises is a non-negative integer combination of
// powers of x, and coefficient growth stays far below 64 bits at the group
// sizes this library targets.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace cycsol {

class Polynomial {
 public:
  using Coeff = long long;

  // degree() of the zero polynomial: -infinity sentinel.
  static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

  Polynomial() = default;  // zero
  explicit Polynomial(Coeff constant) {
    if (constant != 0) coeffs_.push_back(constant);
  }
  // Coefficients in ascending degree order; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial x_power(int k, Coeff c = 1) {
    if (c == 0) return Polynomial();
    std::vector<Coeff> v(static_cast<size_t>(k) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return x_power(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kMinusInfinity
                           : static_cast<int>(coeffs_.size()) - 1;
  }
  Coeff coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size()))
               ? coeffs_[static_cast<size_t>(k)]
               : 0;
  }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  friend Polynomial operator*(Coeff s, Polynomial p) {
    if (s == 0) return Polynomial();
    for (auto& c : p.coeffs_) c *= s;
    return p;
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Horner evaluation in any ring whose values support  v*q + constant  and
  // conversion from long long (rationals, residues, polynomials, integers).
  template <class T>
  T evaluate(const T& point) const {
    T acc = T(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
      // Cast keeps the conversion unambiguous for GMP's class types, which
      // accept long but not long long.
      acc = acc * point + T(static_cast<long>(coeffs_[i]));
    }
    return acc;
  }
  long long evaluate_int(long long point) const {
    long long acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
    return acc;
  }

  // Human form in descending degree, e.g. "2x^2+3x", "x-1", "0".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      Coeff c = coeff(k);
      if (c == 0) continue;
      if (out.empty()) {
        if (c < 0) out += '-';
      } else {
        out += (c > 0) ? '+' : '-';
      }
      if (c < 0) c = -c;
      if (c != 1 || k == 0) out += std::to_string(c);
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

}  // namespace cycsol
