#pragma once

// Exact linear algebra over the rationals for span-membership questions.
// Vectors live in a huge ambient space (indexed by group elements) but are
// sparse; the solver reduces a small full-column-rank basis once and then
// answers membership queries with an exact solve plus full verification.

#include <map>
#include <optional>
#include <vector>

#include "cycsol/rational.hpp"

namespace cycsol {

using SparseVector = std::map<long long, Rational>;  // index -> value, no zeros

// Rank of the span of the given sparse vectors, by exact elimination.
int sparse_rank(const std::vector<SparseVector>& vectors);

class SpanSolver {
 public:
  // Keeps a reference-free copy of the basis.  Requires the basis to be
  // linearly independent; construction throws otherwise.
  explicit SpanSolver(std::vector<SparseVector> basis);

  int dimension() const { return static_cast<int>(basis_.size()); }

  // Coordinates of v in the basis, or nullopt when v lies outside the span.
  // The returned combination is verified exactly against every entry of v.
  std::optional<std::vector<Rational>> solve(const SparseVector& v) const;

 private:
  std::vector<SparseVector> basis_;
  std::vector<long long> pivot_rows_;              // one per basis vector
  std::vector<std::vector<Rational>> inverse_;     // of the pivot submatrix
};

}  // namespace cycsol
