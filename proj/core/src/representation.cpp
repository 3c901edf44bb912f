#include "cycsol/representation.hpp"

#include <stdexcept>

#include "cycsol/struct_consts.hpp"

namespace cycsol {

namespace {

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

void require_field_like(const Coefficient& q) {
  switch (q.kind()) {
    case CoeffKind::Integer:
    case CoeffKind::Rational:
    case CoeffKind::Poly:  // generic parameter: work over the fraction field
      return;
    case CoeffKind::Mod:
      if (!is_prime(q.as_mod().modulus))
        throw std::invalid_argument("composite modulus is not field-like");
      return;
  }
}

}  // namespace

std::vector<SignedComposition> signed_partitions(int n) {
  std::vector<SignedComposition> out;
  for (const auto& mu : enumerate_signed_compositions(n))
    if (mu.is_partition()) out.push_back(mu);
  return out;
}

long long signed_partition_count(int n) {
  // p(k) by the classic doubly-infinite recurrence is overkill at this scale;
  // count partitions with a small table instead.
  std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m)
      p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - part)];
  long long total = 0;
  for (int k = 0; k <= n; ++k)
    total += p[static_cast<size_t>(k)] * p[static_cast<size_t>(n - k)];
  return total;
}

std::vector<SignedComposition> irreducible_labels(int n, const Coefficient& q) {
  require_field_like(q);
  std::vector<SignedComposition> out;
  for (const auto& lambda : signed_partitions(n))
    if (!Coefficient::evaluate(diagonal_constant(lambda), q).is_zero())
      out.push_back(lambda);
  return out;
}

bool CharacterTable::is_lower_triangular() const {
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries[i].size(); ++j)
      if (!entries[i][j].is_zero()) return false;
  return true;
}

CharacterTable character_table(int n, const Coefficient& q) {
  require_field_like(q);
  CharacterTable table;
  table.labels = signed_partitions(n);
  table.entries.reserve(table.labels.size());
  for (const auto& lambda : table.labels) {
    std::vector<Coefficient> row;
    row.reserve(table.labels.size());
    for (const auto& alpha : table.labels) {
      const auto& poly =
          structure_constants(lambda, alpha).coefficient(lambda);
      row.push_back(Coefficient::evaluate(poly, q));
    }
    table.entries.push_back(std::move(row));
  }
  return table;
}

RadicalBasis radical_basis(int n, const Coefficient& q) {
  require_field_like(q);
  RadicalBasis out;
  for (const auto& mu : enumerate_signed_compositions(n)) {
    const auto lambda = signed_partition_of(mu);
    if (mu != lambda) out.difference_pairs.emplace_back(lambda, mu);
  }
  for (const auto& lambda : signed_partitions(n))
    if (Coefficient::evaluate(diagonal_constant(lambda), q).is_zero())
      out.degenerate.push_back(lambda);
  return out;
}

}  // namespace cycsol
