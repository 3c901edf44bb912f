#pragma once

// Integer matrices encoding products of basis elements.  For signed
// compositions mu (k parts) and nu (l parts), the admissible k x l matrices M
// have
//   * row sums of |entries| equal to |mu_i|, column sums equal to |nu_j|,
//   * m_ij >= 0 when mu_i > 0 and nu_j > 0, and m_ij <= 0 otherwise.
// Reading the non-zero entries left to right, top to bottom gives a signed
// composition comp(M); the weight of M collects the entries lying in a
// negative row and a negative column.  The product E_mu E_nu equals the sum of
// r^weight(M) E_comp(M) over all admissible M.

#include <vector>

#include "cycsol/signed_composition.hpp"

namespace cycsol {

class StructMatrix {
 public:
  StructMatrix(SignedComposition mu, SignedComposition nu,
               std::vector<int> entries)
      : mu_(std::move(mu)), nu_(std::move(nu)), entries_(std::move(entries)) {}

  int rows() const { return mu_.length(); }
  int cols() const { return nu_.length(); }
  int at(int i, int j) const {  // 0-based
    return entries_[static_cast<size_t>(i) * static_cast<size_t>(cols()) +
                    static_cast<size_t>(j)];
  }
  const SignedComposition& mu() const { return mu_; }
  const SignedComposition& nu() const { return nu_; }
  const std::vector<int>& entries() const { return entries_; }

  // Sum of |m_ij| over cells with mu_i < 0 and nu_j < 0.
  int weight() const {
    int w = 0;
    for (int i = 0; i < rows(); ++i) {
      if (mu_.part(i) >= 0) continue;
      for (int j = 0; j < cols(); ++j)
        if (nu_.part(j) < 0) w -= at(i, j);
    }
    return w;
  }

  // Non-zero entries in row-major order.
  SignedComposition composition() const {
    std::vector<int> parts;
    for (int v : entries_)
      if (v != 0) parts.push_back(v);
    return SignedComposition(std::move(parts));
  }

  bool operator==(const StructMatrix& o) const {
    return entries_ == o.entries_ && mu_ == o.mu_ && nu_ == o.nu_;
  }

 private:
  SignedComposition mu_, nu_;
  std::vector<int> entries_;
};

// All admissible matrices for the pair (mu, nu), generated by row-major
// backtracking with each cell's absolute value increasing from 0.  Requires
// |mu| = |nu|.
std::vector<StructMatrix> enumerate_struct_matrices(const SignedComposition& mu,
                                                    const SignedComposition& nu);

}  // namespace cycsol
