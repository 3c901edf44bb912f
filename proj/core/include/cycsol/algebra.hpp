#pragma once

// Elements of the generic algebra of degree n in the E-basis, with
// coefficients in one of the supported rings.  The multiplication evaluates
// the structure-constant polynomials at a chosen parameter q of the same kind
// as the coefficients (or lifts integer coefficients into q's kind).

#include <map>
#include <vector>

#include "cycsol/coefficient.hpp"
#include "cycsol/signed_composition.hpp"
#include "cycsol/struct_consts.hpp"

namespace cycsol {

class AlgebraElement {
 public:
  explicit AlgebraElement(int n) : n_(n) {}

  static AlgebraElement basis(int n, const SignedComposition& mu,
                              Coefficient scale = Coefficient(1));
  static AlgebraElement unit(int n) {  // E_(n), the identity
    return basis(n, SignedComposition({n}));
  }

  int degree() const { return n_; }
  const std::map<SignedComposition, Coefficient>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const SignedComposition& mu) const;

  void add_term(const SignedComposition& mu, const Coefficient& c);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Coefficient& c) const;

  bool operator==(const AlgebraElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  int n_;
  std::map<SignedComposition, Coefficient> terms_;  // canonical order, no zeros
};

// a * b with the structure constants evaluated at q.
AlgebraElement algebra_multiply(const AlgebraElement& a, const AlgebraElement& b,
                                const Coefficient& q);

// Column j holds the coordinates of  a * E_{mu_j}  in the canonical basis
// order, so the assignment a -> matrix is an algebra homomorphism.
std::vector<std::vector<Coefficient>> regular_representation(
    const AlgebraElement& a, const Coefficient& q);

enum class Subalgebra {
  kPlus,        // every part of every key positive
  kSameSign,    // every key all-positive or all-negative
  // Parts 2..k of every key negative, first part free.  A key of this shape
  // names the subgroup generated by the leading block's coloured generators
  // together with plain transpositions; products of such keys keep the shape
  // (the positive positions of any product key form one leading run), so this
  // span is closed under multiplication.  The all-positive variant is not:
  // E_(1,1) * E_(-2) = E_(-1,-1) already leaves it.
  kTailNegative,
  kFiltration,  // every key has |mu|^+ <= level
};

bool subalgebra_membership(const AlgebraElement& a, Subalgebra which,
                           int level = 0);

// Image of a under the key map E_mu -> E_{mu^+} (all parts made positive).
// At q = 1 this is an algebra homomorphism onto the span of the all-positive
// keys; at other parameter values it is merely linear.
AlgebraElement positive_projection(const AlgebraElement& a);

}  // namespace cycsol
