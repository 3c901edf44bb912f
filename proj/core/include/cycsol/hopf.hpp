#pragma once

// The tower of algebras across all degrees, made into a graded bialgebra.
// The external (shuffle-side) product concatenates keys, the coproduct splits
// a key into sign-compatible pieces, and the primitive elements P_k provide a
// free generating set.  A second, internal product multiplies degreewise with
// the structure constants; it is compatible with the coproduct.
//
// Containers are generic in the coefficient ring: exact rationals are the
// default (the primitive basis needs denominators); integer-polynomial
// coefficients support identities in the generic parameter x.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cycsol/rational.hpp"
#include "cycsol/signed_composition.hpp"
#include "cycsol/struct_consts.hpp"
#include "cycsol/wreath.hpp"

namespace cycsol {

// A finite linear combination of basis keys E_mu with mu of any degree; the
// empty composition spans degree 0.
template <class C>
class Graded {
 public:
  Graded() = default;
  static Graded basis(const SignedComposition& mu, C scale = C(1)) {
    Graded g;
    g.add(mu, scale);
    return g;
  }
  static Graded one() { return basis(SignedComposition()); }

  const std::map<SignedComposition, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const SignedComposition& mu, const C& c) {
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
      if (!(c == C(0))) terms_.emplace(mu, c);
      return;
    }
    it->second = it->second + c;
    if (it->second == C(0)) terms_.erase(it);
  }
  C coefficient(const SignedComposition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? C(0) : it->second;
  }
  Graded operator+(const Graded& o) const {
    Graded out = *this;
    for (const auto& [mu, c] : o.terms_) out.add(mu, c);
    return out;
  }
  Graded operator-(const Graded& o) const {
    Graded out = *this;
    for (const auto& [mu, c] : o.terms_) out.add(mu, C(0) - c);
    return out;
  }
  Graded scaled(const C& s) const {
    Graded out;
    if (s == C(0)) return out;
    for (const auto& [mu, c] : terms_) out.add(mu, c * s);
    return out;
  }
  // Restriction to one degree.
  Graded component(int n) const {
    Graded out;
    for (const auto& [mu, c] : terms_)
      if (mu.size() == n) out.add(mu, c);
    return out;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
    return d;
  }
  bool operator==(const Graded& o) const { return terms_ == o.terms_; }

 private:
  std::map<SignedComposition, C> terms_;
};

template <class C>
class GradedTensor {
 public:
  using Key = std::pair<SignedComposition, SignedComposition>;

  const std::map<Key, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Key& key, const C& c) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!(c == C(0))) terms_.emplace(key, c);
      return;
    }
    it->second = it->second + c;
    if (it->second == C(0)) terms_.erase(it);
  }
  GradedTensor operator-(const GradedTensor& o) const {
    GradedTensor out = *this;
    for (const auto& [k, c] : o.terms_) out.add(k, C(0) - c);
    return out;
  }
  bool operator==(const GradedTensor& o) const { return terms_ == o.terms_; }

 private:
  std::map<Key, C> terms_;
};

using GradedElement = Graded<Rational>;
using GradedRationalTensor = GradedTensor<Rational>;

// ---- external structure ----------------------------------------------------

// Concatenation product: E_mu * E_nu = E_{mu . nu}, extended bilinearly.
template <class C>
Graded<C> shuffle_product(const Graded<C>& a, const Graded<C>& b) {
  Graded<C> out;
  for (const auto& [mu, ca] : a.terms())
    for (const auto& [nu, cb] : b.terms())
      out.add(mu.concatenated(nu), ca * cb);
  return out;
}

// Coproduct: E_mu splits over all sign-compatible two-part splits of mu, the
// pieces compressed by dropping zero entries.
template <class C>
GradedTensor<C> coproduct(const Graded<C>& a) {
  GradedTensor<C> out;
  for (const auto& [mu, c] : a.terms())
    for (const auto& [left, right] : sign_compatible_splits(mu))
      out.add({left.compressed(), right.compressed()}, c);
  return out;
}

// Counit: the coefficient of the degree-0 key.
template <class C>
C counit(const Graded<C>& a) {
  return a.coefficient(SignedComposition());
}

// Componentwise concatenation on tensors.
template <class C>
GradedTensor<C> tensor_shuffle_product(const GradedTensor<C>& a,
                                       const GradedTensor<C>& b) {
  GradedTensor<C> out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add({ka.first.concatenated(kb.first),
               ka.second.concatenated(kb.second)},
              ca * cb);
  return out;
}

// ---- primitive basis -------------------------------------------------------

// P_k = sum over compositions alpha of |k|, signs matching k, of
// (-1)^(len-1)/len * E_alpha.  Primitive for the coproduct.
GradedElement primitive_generator(int k);

// Change of basis to words in the primitives: the result maps each word
// (c_1,...,c_m), encoded as a signed composition, to the coefficient of
// P_{c_1} * ... * P_{c_m}.
Graded<Rational> expand_in_primitives(const GradedElement& a);

// Inverse change of basis: a combination of primitive words back in the
// E-basis.
GradedElement expand_from_primitives(const Graded<Rational>& words);

// Antipode: reverses primitive words with sign (-1)^length.
GradedElement antipode(const GradedElement& a);

// ---- internal structure ----------------------------------------------------

// Degreewise product with the structure constants evaluated at q; terms of
// different degree annihilate each other.
template <class C>
Graded<C> internal_product(const Graded<C>& a, const Graded<C>& b, const C& q) {
  Graded<C> out;
  for (const auto& [mu, ca] : a.terms())
    for (const auto& [nu, cb] : b.terms()) {
      if (mu.size() != nu.size()) continue;
      for (const auto& [sigma, poly] : structure_constants(mu, nu).terms)
        out.add(sigma, ca * cb * poly.template evaluate<C>(q));
    }
  return out;
}

// Also on tensors, componentwise.
template <class C>
GradedTensor<C> tensor_internal_product(const GradedTensor<C>& a,
                                        const GradedTensor<C>& b, const C& q) {
  GradedTensor<C> out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.first.size() != kb.first.size() ||
          ka.second.size() != kb.second.size())
        continue;
      const C scale = ca * cb;
      for (const auto& [s1, p1] : structure_constants(ka.first, kb.first).terms)
        for (const auto& [s2, p2] :
             structure_constants(ka.second, kb.second).terms)
          out.add({s1, s2},
                  scale * p1.template evaluate<C>(q) *
                      p2.template evaluate<C>(q));
    }
  return out;
}

// ---- group-level coproduct -------------------------------------------------

// The n+1 terms of the coproduct of a single group element: for each split
// point m the unique factorization g = e^{-1} (g' x g'') with e minimal for
// the two-block subgroup yields the pair (g', g'') in G(r,1,m) x G(r,1,n-m).
std::vector<std::pair<GroupElement, GroupElement>> group_coproduct(
    const GroupElement& g);

}  // namespace cycsol
