#include "cycsol/linalg.hpp"

#include <stdexcept>

namespace cycsol {

namespace {

// Eliminates v against the reduced columns, returning the residual.
SparseVector reduce(SparseVector v,
                    const std::vector<SparseVector>& reduced,
                    const std::vector<long long>& pivots) {
  for (size_t i = 0; i < reduced.size(); ++i) {
    auto it = v.find(pivots[i]);
    if (it == v.end()) continue;
    const Rational factor = it->second / reduced[i].at(pivots[i]);
    for (const auto& [row, value] : reduced[i]) {
      auto vit = v.find(row);
      if (vit == v.end()) {
        Rational nv = -factor * value;
        if (nv != 0) v.emplace(row, std::move(nv));
      } else {
        vit->second -= factor * value;
        if (vit->second == 0) v.erase(vit);
      }
    }
  }
  return v;
}

}  // namespace

int sparse_rank(const std::vector<SparseVector>& vectors) {
  std::vector<SparseVector> reduced;
  std::vector<long long> pivots;
  for (const auto& v : vectors) {
    SparseVector res = reduce(v, reduced, pivots);
    if (res.empty()) continue;
    pivots.push_back(res.begin()->first);
    reduced.push_back(std::move(res));
  }
  return static_cast<int>(reduced.size());
}

SpanSolver::SpanSolver(std::vector<SparseVector> basis)
    : basis_(std::move(basis)) {
  // Find one pivot row per basis vector by elimination.
  std::vector<SparseVector> reduced;
  for (const auto& v : basis_) {
    SparseVector res = reduce(v, reduced, pivot_rows_);
    if (res.empty())
      throw std::invalid_argument("span solver basis is linearly dependent");
    pivot_rows_.push_back(res.begin()->first);
    reduced.push_back(std::move(res));
  }
  // Invert the pivot submatrix A with A[i][j] = basis_j[pivot_i] by
  // Gauss-Jordan over the rationals.
  const size_t dim = basis_.size();
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(2 * dim, 0));
  for (size_t j = 0; j < dim; ++j)
    for (size_t i = 0; i < dim; ++i) {
      auto it = basis_[j].find(pivot_rows_[i]);
      if (it != basis_[j].end()) a[i][j] = it->second;
    }
  for (size_t i = 0; i < dim; ++i) a[i][dim + i] = 1;
  for (size_t col = 0; col < dim; ++col) {
    size_t pivot = col;
    while (pivot < dim && a[pivot][col] == 0) ++pivot;
    if (pivot == dim)
      throw std::logic_error("pivot submatrix is singular");
    std::swap(a[col], a[pivot]);
    const Rational inv = 1 / a[col][col];
    for (size_t j = 0; j < 2 * dim; ++j) a[col][j] *= inv;
    for (size_t row = 0; row < dim; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (size_t j = col; j < 2 * dim; ++j) a[row][j] -= f * a[col][j];
    }
  }
  inverse_.assign(dim, std::vector<Rational>(dim, 0));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) inverse_[i][j] = a[i][dim + j];
}

std::optional<std::vector<Rational>> SpanSolver::solve(
    const SparseVector& v) const {
  const size_t dim = basis_.size();
  // Candidate coordinates from the pivot rows alone.
  std::vector<Rational> rhs(dim, 0);
  for (size_t i = 0; i < dim; ++i) {
    auto it = v.find(pivot_rows_[i]);
    if (it != v.end()) rhs[i] = it->second;
  }
  std::vector<Rational> coords(dim, 0);
  for (size_t i = 0; i < dim; ++i) {
    Rational acc = 0;
    for (size_t j = 0; j < dim; ++j)
      if (rhs[j] != 0) acc += inverse_[i][j] * rhs[j];
    coords[i] = acc;
  }
  // Exact verification on every row of the combination.
  SparseVector residual = v;
  for (size_t j = 0; j < dim; ++j) {
    if (coords[j] == 0) continue;
    for (const auto& [row, value] : basis_[j]) {
      auto it = residual.find(row);
      if (it == residual.end()) {
        Rational nv = -coords[j] * value;
        if (nv != 0) residual.emplace(row, std::move(nv));
      } else {
        it->second -= coords[j] * value;
        if (it->second == 0) residual.erase(it);
      }
    }
  }
  if (!residual.empty()) return std::nullopt;
  return coords;
}

}  // namespace cycsol
