#include "cycsol/struct_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycsol {

namespace {

struct Enumerator {
  const SignedComposition& mu;
  const SignedComposition& nu;
  int k, l;
  std::vector<int> col_left;   // remaining |column sum| budget
  std::vector<int> abs_cells;  // |entries|, row-major
  std::vector<StructMatrix>* out;

  void emit() {
    std::vector<int> signed_cells(abs_cells.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < l; ++j) {
        size_t idx = static_cast<size_t>(i) * static_cast<size_t>(l) +
                     static_cast<size_t>(j);
        int sign = (mu.part(i) > 0 && nu.part(j) > 0) ? 1 : -1;
        signed_cells[idx] = sign * abs_cells[idx];
      }
    out->emplace_back(mu, nu, std::move(signed_cells));
  }

  // Fill row i from column j onward with row_left still to place.
  void fill(int i, int j, int row_left) {
    if (j == l) {
      if (row_left != 0) return;
      if (i + 1 == k) {
        // Column budgets are exhausted automatically: total degree matches.
        emit();
      } else {
        fill(i + 1, 0, std::abs(mu.part(i + 1)));
      }
      return;
    }
    size_t idx = static_cast<size_t>(i) * static_cast<size_t>(l) +
                 static_cast<size_t>(j);
    int cap = std::min(row_left, col_left[static_cast<size_t>(j)]);
    for (int v = 0; v <= cap; ++v) {
      abs_cells[idx] = v;
      col_left[static_cast<size_t>(j)] -= v;
      fill(i, j + 1, row_left - v);
      col_left[static_cast<size_t>(j)] += v;
    }
    abs_cells[idx] = 0;
  }
};

}  // namespace

std::vector<StructMatrix> enumerate_struct_matrices(
    const SignedComposition& mu, const SignedComposition& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("matrix enumeration requires equal degree");
  std::vector<StructMatrix> out;
  if (mu.length() == 0) {  // both empty: the unique 0x0 matrix
    out.emplace_back(mu, nu, std::vector<int>{});
    return out;
  }
  if (nu.length() == 0) return out;  // no matrix can satisfy the row sums
  Enumerator e{mu,
               nu,
               mu.length(),
               nu.length(),
               {},
               std::vector<int>(static_cast<size_t>(mu.length()) *
                                    static_cast<size_t>(nu.length()),
                                0),
               &out};
  e.col_left.resize(static_cast<size_t>(nu.length()));
  for (int j = 0; j < nu.length(); ++j)
    e.col_left[static_cast<size_t>(j)] = std::abs(nu.part(j));
  e.fill(0, 0, std::abs(mu.part(0)));
  return out;
}

}  // namespace cycsol
