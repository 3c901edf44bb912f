#include "cycsol/algebra.hpp"

#include <stdexcept>

namespace cycsol {

AlgebraElement AlgebraElement::basis(int n, const SignedComposition& mu,
                                     Coefficient scale) {
  if (mu.size() != n)
    throw std::invalid_argument("basis key degree mismatch");
  AlgebraElement out(n);
  out.add_term(mu, scale);
  return out;
}

Coefficient AlgebraElement::coefficient(const SignedComposition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void AlgebraElement::add_term(const SignedComposition& mu,
                              const Coefficient& c) {
  if (mu.size() != n_)
    throw std::invalid_argument("term degree mismatch");
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(mu, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
  AlgebraElement out = *this;
  for (const auto& [mu, c] : o.terms_) out.add_term(mu, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("degree mismatch");
  AlgebraElement out = *this;
  for (const auto& [mu, c] : o.terms_) out.add_term(mu, -c);
  return out;
}

AlgebraElement AlgebraElement::scaled(const Coefficient& c) const {
  AlgebraElement out(n_);
  for (const auto& [mu, v] : terms_) out.add_term(mu, v * c);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")E" + mu.to_string();
  }
  return out;
}

AlgebraElement algebra_multiply(const AlgebraElement& a,
                                const AlgebraElement& b,
                                const Coefficient& q) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
  AlgebraElement out(a.degree());
  for (const auto& [mu, ca] : a.terms()) {
    for (const auto& [nu, cb] : b.terms()) {
      const Coefficient scale = ca * cb;
      for (const auto& [sigma, poly] : structure_constants(mu, nu).terms)
        out.add_term(sigma, scale * Coefficient::evaluate(poly, q));
    }
  }
  return out;
}

std::vector<std::vector<Coefficient>> regular_representation(
    const AlgebraElement& a, const Coefficient& q) {
  const auto basis = enumerate_signed_compositions(a.degree());
  const size_t dim = basis.size();
  std::map<SignedComposition, size_t> index;
  for (size_t i = 0; i < dim; ++i) index.emplace(basis[i], i);
  std::vector<std::vector<Coefficient>> matrix(
      dim, std::vector<Coefficient>(dim, Coefficient::zero_like(q)));
  for (size_t j = 0; j < dim; ++j) {
    const auto column =
        algebra_multiply(a, AlgebraElement::basis(a.degree(), basis[j]), q);
    for (const auto& [sigma, c] : column.terms())
      matrix[index.at(sigma)][j] = c;
  }
  return matrix;
}

bool subalgebra_membership(const AlgebraElement& a, Subalgebra which,
                           int level) {
  for (const auto& [mu, c] : a.terms()) {
    switch (which) {
      case Subalgebra::kPlus:
        if (!mu.all_positive()) return false;
        break;
      case Subalgebra::kSameSign:
        if (!mu.all_positive() && !mu.all_negative()) return false;
        break;
      case Subalgebra::kTailNegative:
        for (int i = 1; i < mu.length(); ++i)
          if (mu.part(i) > 0) return false;
        break;
      case Subalgebra::kFiltration:
        if (mu.positive_weight() > level) return false;
        break;
    }
  }
  return true;
}

AlgebraElement positive_projection(const AlgebraElement& a) {
  AlgebraElement out(a.degree());
  for (const auto& [mu, c] : a.terms()) out.add_term(mu.absolutes(), c);
  return out;
}

}  // namespace cycsol
