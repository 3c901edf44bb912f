#pragma once

// Ground-truth computations inside the rational group algebra of G(r,1,n).
// Basis sums over transversals are expanded literally, multiplied as sparse
// vectors of group elements, and resolved back into basis coordinates with
// exact linear algebra.  Everything here is independent of the combinatorial
// product formulas, which is what makes it a useful referee.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cycsol/cosets.hpp"
#include "cycsol/linalg.hpp"
#include "cycsol/rational.hpp"
#include "cycsol/signed_composition.hpp"
#include "cycsol/wreath.hpp"

namespace cycsol {

// Default ceiling on r^n * n! for oracle work.
inline constexpr long long kDefaultOracleLimit = 200000;

class GroupAlgebraElement {
 public:
  GroupAlgebraElement(int r, int n) : r_(r), n_(n) {}

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<GroupElement, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const GroupElement& g, const Rational& c);
  Rational coefficient(const GroupElement& g) const;

  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;

  // Sparse coordinate vector indexed by element rank.
  SparseVector to_sparse() const;

  bool operator==(const GroupAlgebraElement& o) const {
    return r_ == o.r_ && n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  int r_, n_;
  std::map<GroupElement, Rational> terms_;
};

// E_mu as the literal sum over the minimal coset representatives.
GroupAlgebraElement expand_E(const SignedComposition& mu, int r);

// The alternative transversal sum.
GroupAlgebraElement expand_E_mak(const SignedComposition& mu, int r);

// Coordinates of E_mu E_nu in the basis {E_sigma}; throws if (r,n) exceeds
// `limit`, errors (nullopt entries never occur: the product always lies in
// the span, and a failure to resolve it throws std::logic_error).
std::map<SignedComposition, Rational> oracle_product(
    const SignedComposition& mu, const SignedComposition& nu, int r,
    long long limit = kDefaultOracleLimit);

struct MakClosureReport {
  bool full_rank = false;  // the alternative sums span rank 2*3^(n-1)
  bool closed = false;     // every pairwise product stays in their span
  // First failing pair when not closed.
  std::optional<std::pair<SignedComposition, SignedComposition>> witness;
};

MakClosureReport mak_closure_check(int n, int r,
                                   long long limit = kDefaultOracleLimit);

// Checks the group-level coproduct of the transversal sum of mu against the
// sign-compatible splits: both sides are multisets of element pairs.
bool verify_group_coproduct(const SignedComposition& mu, int r);

}  // namespace cycsol
