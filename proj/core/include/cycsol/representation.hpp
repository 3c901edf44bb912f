#pragma once

// Representation theory of the specialized algebra.  Irreducible modules are
// one-dimensional and indexed by the signed partitions lambda of n whose
// eigenvalue polynomial does not vanish at q; the basis element E_alpha acts
// on the module of lambda by the scalar d_{lambda alpha lambda}(q).  The
// table of those scalars over all pairs of signed partitions is lower
// triangular in canonical order.

#include <utility>
#include <vector>

#include "cycsol/algebra.hpp"
#include "cycsol/coefficient.hpp"
#include "cycsol/signed_composition.hpp"

namespace cycsol {

// Signed partitions of n (weakly decreasing parts), canonical order.
std::vector<SignedComposition> signed_partitions(int n);

// Number of signed partitions of n: sum over k of p(k) p(n-k).
long long signed_partition_count(int n);

// Labels lambda with d_{lambda lambda lambda}(q) != 0.  q must be field-like:
// integer, rational, a prime modulus, or the generic parameter itself;
// composite moduli are rejected.
std::vector<SignedComposition> irreducible_labels(int n, const Coefficient& q);

struct CharacterTable {
  std::vector<SignedComposition> labels;          // canonical order
  std::vector<std::vector<Coefficient>> entries;  // entries[row][col]

  bool is_lower_triangular() const;
};

// entries[lambda][alpha] = d_{lambda alpha lambda}(q) over all signed
// partitions of n.
CharacterTable character_table(int n, const Coefficient& q);

struct RadicalBasis {
  // E_lambda - E_mu for mu ~ lambda, mu != lambda, lambda the signed
  // partition of the class.
  std::vector<std::pair<SignedComposition, SignedComposition>> difference_pairs;
  // E_lambda for labels whose eigenvalue polynomial vanishes at q.
  std::vector<SignedComposition> degenerate;

  int dimension() const {
    return static_cast<int>(difference_pairs.size() + degenerate.size());
  }
};

// Basis of the Jacobson radical at q; the quotient dimension is
// 2*3^(n-1) - dimension().
RadicalBasis radical_basis(int n, const Coefficient& q);

}  // namespace cycsol
