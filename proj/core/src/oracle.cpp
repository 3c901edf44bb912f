#include "cycsol/oracle.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "cycsol/hopf.hpp"

namespace cycsol {

namespace {

void check_limit(int r, int n, long long limit) {
  if (group_order(r, n) > limit)
    throw std::invalid_argument("group order exceeds the oracle limit");
}

struct OracleBasis {
  std::vector<SignedComposition> keys;  // canonical order
  SpanSolver solver;
};

// The expanded basis and its solver are expensive to set up, so they are
// cached per (r, n).  Solving afterwards is const and safe to share.
const OracleBasis& oracle_basis(int r, int n) {
  static std::mutex guard;
  static std::map<std::pair<int, int>, std::unique_ptr<OracleBasis>> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto& slot = cache[{r, n}];
  if (!slot) {
    auto keys = enumerate_signed_compositions(n);
    std::vector<SparseVector> basis;
    basis.reserve(keys.size());
    for (const auto& key : keys) basis.push_back(expand_E(key, r).to_sparse());
    slot = std::make_unique<OracleBasis>(
        OracleBasis{std::move(keys), SpanSolver(std::move(basis))});
  }
  return *slot;
}

}  // namespace

void GroupAlgebraElement::add(const GroupElement& g, const Rational& c) {
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational GroupAlgebraElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

GroupAlgebraElement GroupAlgebraElement::operator*(
    const GroupAlgebraElement& o) const {
  if (r_ != o.r_ || n_ != o.n_)
    throw std::invalid_argument("group algebra mismatch");
  GroupAlgebraElement out(r_, n_);
  for (const auto& [g, cg] : terms_)
    for (const auto& [h, ch] : o.terms_) out.add(g * h, cg * ch);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator+(
    const GroupAlgebraElement& o) const {
  if (r_ != o.r_ || n_ != o.n_)
    throw std::invalid_argument("group algebra mismatch");
  GroupAlgebraElement out = *this;
  for (const auto& [g, c] : o.terms_) out.add(g, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(
    const GroupAlgebraElement& o) const {
  if (r_ != o.r_ || n_ != o.n_)
    throw std::invalid_argument("group algebra mismatch");
  GroupAlgebraElement out = *this;
  for (const auto& [g, c] : o.terms_) out.add(g, -c);
  return out;
}

SparseVector GroupAlgebraElement::to_sparse() const {
  SparseVector v;
  for (const auto& [g, c] : terms_) v.emplace(element_index(g), c);
  return v;
}

GroupAlgebraElement expand_E(const SignedComposition& mu, int r) {
  GroupAlgebraElement out(r, mu.size());
  for (const auto& e : coset_transversal(mu, r)) out.add(e, 1);
  return out;
}

GroupAlgebraElement expand_E_mak(const SignedComposition& mu, int r) {
  GroupAlgebraElement out(r, mu.size());
  for (const auto& e : mak_transversal(mu, r)) out.add(e, 1);
  return out;
}

std::map<SignedComposition, Rational> oracle_product(
    const SignedComposition& mu, const SignedComposition& nu, int r,
    long long limit) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("degree mismatch");
  const int n = mu.size();
  check_limit(r, n, limit);
  const auto& basis = oracle_basis(r, n);
  const auto product = expand_E(mu, r) * expand_E(nu, r);
  const auto coords = basis.solver.solve(product.to_sparse());
  if (!coords)
    throw std::logic_error("transversal product escaped the basis span");
  std::map<SignedComposition, Rational> out;
  for (size_t i = 0; i < basis.keys.size(); ++i)
    if ((*coords)[i] != 0) out.emplace(basis.keys[i], (*coords)[i]);
  return out;
}

MakClosureReport mak_closure_check(int n, int r, long long limit) {
  check_limit(r, n, limit);
  MakClosureReport report;
  const auto keys = enumerate_signed_compositions(n);
  std::vector<SparseVector> basis;
  std::vector<GroupAlgebraElement> sums;
  basis.reserve(keys.size());
  sums.reserve(keys.size());
  for (const auto& key : keys) {
    sums.push_back(expand_E_mak(key, r));
    basis.push_back(sums.back().to_sparse());
  }
  if (sparse_rank(basis) != static_cast<int>(keys.size())) return report;
  report.full_rank = true;
  SpanSolver solver(std::move(basis));
  for (size_t i = 0; i < keys.size(); ++i)
    for (size_t j = 0; j < keys.size(); ++j) {
      const auto product = sums[i] * sums[j];
      if (!solver.solve(product.to_sparse())) {
        report.witness = std::make_pair(keys[i], keys[j]);
        return report;
      }
    }
  report.closed = true;
  return report;
}

bool verify_group_coproduct(const SignedComposition& mu, int r) {
  // Left side: coproducts of every transversal element of mu, as a multiset
  // of element pairs.
  std::map<std::pair<GroupElement, GroupElement>, long long> lhs;
  for (const auto& e : coset_transversal(mu, r))
    for (const auto& pair : group_coproduct(e)) ++lhs[pair];
  // Right side: for every sign-compatible split, all pairs from the two
  // transversals of the compressed pieces.
  std::map<std::pair<GroupElement, GroupElement>, long long> rhs;
  for (const auto& [left, right] : sign_compatible_splits(mu)) {
    const auto lc = left.compressed();
    const auto rc = right.compressed();
    // Degree-0 sides contribute the empty group's identity.
    std::vector<GroupElement> le =
        lc.size() == 0 ? std::vector<GroupElement>{GroupElement(r, 0)}
                       : coset_transversal(lc, r);
    std::vector<GroupElement> re =
        rc.size() == 0 ? std::vector<GroupElement>{GroupElement(r, 0)}
                       : coset_transversal(rc, r);
    for (const auto& a : le)
      for (const auto& b : re) ++rhs[{a, b}];
  }
  return lhs == rhs;
}

}  // namespace cycsol
