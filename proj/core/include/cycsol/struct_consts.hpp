#pragma once

// Structure constants of the generic algebra with basis {E_mu}, mu running
// over the signed compositions of n:
//
//   E_mu E_nu = sum_sigma d_{mu nu sigma}(x) E_sigma,
//
// where each d_{mu nu sigma}(x) is a polynomial in x with non-negative integer
// coefficients.  Evaluating x at a colour order r >= 2 recovers the descent
// algebra of G(r,1,n) inside its group algebra.  Two independent computations
// are provided: one walks double-coset families, the other enumerates
// admissible integer matrices; they agree term by term.

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "cycsol/polynomial.hpp"
#include "cycsol/signed_composition.hpp"

namespace cycsol {

struct StructureConstants {
  SignedComposition mu, nu;
  // Keys in canonical order; no zero polynomials are stored.
  std::map<SignedComposition, Polynomial> terms;

  const Polynomial& coefficient(const SignedComposition& sigma) const;
  bool operator==(const StructureConstants& o) const {
    return mu == o.mu && nu == o.nu && terms == o.terms;
  }
};

// Sums x^weight over double-coset families, keyed by the intersection
// composition of each family.
StructureConstants structure_constants_via_cosets(const SignedComposition& mu,
                                                  const SignedComposition& nu);

// Sums x^weight(M) over admissible matrices, keyed by comp(M).
StructureConstants structure_constants_via_matrices(const SignedComposition& mu,
                                                    const SignedComposition& nu);

// Memoized front-end: coset walk for n <= 6, matrix enumeration above.  The
// in-memory cache is shared and thread-safe; an optional disk cache mirrors it
// when a directory has been configured.
const StructureConstants& structure_constants(const SignedComposition& mu,
                                              const SignedComposition& nu);

// d_{lambda lambda lambda}(x): the eigenvalue polynomial of the label lambda.
Polynomial diagonal_constant(const SignedComposition& lambda);

// Product over the distinct signed part values of (multiplicity)!.  This is
// the coefficient of x^{|lambda|^-} in diagonal_constant(lambda).
long long diagonal_multiplicity_factor(const SignedComposition& lambda);

// Product over the distinct part sizes of lambda^+ of (multiplicity)!; the
// index of the block permutation subgroup in its normalizer.  Differs from
// diagonal_multiplicity_factor exactly when equal part sizes carry mixed
// signs, the smallest case being (1,-1).
long long normalizer_index(const SignedComposition& lambda);

// Configure (or clear) the structure-constant disk cache directory.  Files are
// addressed by (n, mu, nu) and carry a format-version header.
void set_constants_disk_cache(const std::optional<std::filesystem::path>& dir);

// Drop the in-memory cache (used by benchmarks and tests).
void clear_constants_memory_cache();

}  // namespace cycsol
