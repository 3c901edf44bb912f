#include "cycsol/cosets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cycsol {

namespace {

// Appends to `out` every way of filling the remaining rows with the sorted
// pool of unused values, rows filled by increasing-index subsets so the
// resulting one-line words come out deterministically.
void fill_rows(const std::vector<int>& shape, size_t row,
               const std::vector<int>& pool, std::vector<int>& oneline,
               std::vector<std::vector<int>>& out) {
  if (row == shape.size()) {
    out.push_back(oneline);
    return;
  }
  const int want = shape[row];
  if (row + 1 == shape.size()) {
    // Last row takes everything that is left, already sorted.
    oneline.insert(oneline.end(), pool.begin(), pool.end());
    out.push_back(oneline);
    oneline.resize(oneline.size() - pool.size());
    return;
  }
  // Choose `want` values out of the pool, lexicographically by index.
  std::vector<int> pick(static_cast<size_t>(want));
  std::vector<size_t> idx(static_cast<size_t>(want));
  auto rec = [&](auto&& self, size_t slot, size_t from) -> void {
    if (slot == pick.size()) {
      std::vector<int> rest;
      rest.reserve(pool.size() - pick.size());
      size_t next = 0;
      for (size_t i = 0; i < pool.size(); ++i) {
        if (next < idx.size() && idx[next] == i) {
          ++next;
        } else {
          rest.push_back(pool[i]);
        }
      }
      oneline.insert(oneline.end(), pick.begin(), pick.end());
      fill_rows(shape, row + 1, rest, oneline, out);
      oneline.resize(oneline.size() - pick.size());
      return;
    }
    for (size_t i = from; i + (pick.size() - slot) <= pool.size(); ++i) {
      idx[slot] = i;
      pick[slot] = pool[i];
      self(self, slot + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
}

std::vector<int> positive_shape(const SignedComposition& mu) {
  std::vector<int> shape;
  shape.reserve(static_cast<size_t>(mu.length()));
  for (int p : mu.parts()) shape.push_back(p > 0 ? p : -p);
  return shape;
}

// Positions (0-based) lying in a block with a negative part.
std::vector<int> negative_positions(const SignedComposition& mu) {
  std::vector<int> out;
  const auto row = mu.row_of_position();
  for (size_t p = 0; p < row.size(); ++p)
    if (mu.part(row[p]) < 0) out.push_back(static_cast<int>(p));
  return out;
}

// Iterate all colour vectors supported on `support` (0-based positions),
// first support position fastest, invoking f(colours).
template <class F>
void for_each_supported_colouring(int n, int r, const std::vector<int>& support,
                                  F&& f) {
  std::vector<int> colours(static_cast<size_t>(n), 0);
  while (true) {
    f(colours);
    size_t i = 0;
    while (i < support.size()) {
      int& c = colours[static_cast<size_t>(support[i])];
      if (++c < r) break;
      c = 0;
      ++i;
    }
    if (i == support.size()) break;
  }
}

long long binomial(long long m, long long k) {
  if (k < 0 || k > m) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (m - k + i) / i;
  return out;
}

}  // namespace

std::vector<GroupElement> young_transversal(const SignedComposition& lambda,
                                            int r) {
  const int n = lambda.size();
  const auto shape = positive_shape(lambda);
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::vector<int>> onelines;
  std::vector<int> scratch;
  fill_rows(shape, 0, pool, scratch, onelines);
  std::vector<GroupElement> out;
  out.reserve(onelines.size());
  for (auto& ol : onelines)
    out.emplace_back(r, std::vector<int>(static_cast<size_t>(n), 0),
                     std::move(ol));
  return out;
}

std::vector<GroupElement> coset_transversal(const SignedComposition& mu,
                                            int r) {
  if (r < 2) throw std::invalid_argument("coset transversal requires r >= 2");
  const auto perms = young_transversal(mu, r);
  const auto support = negative_positions(mu);
  std::vector<GroupElement> out;
  for_each_supported_colouring(mu.size(), r, support,
                               [&](const std::vector<int>& colours) {
                                 for (const auto& d : perms)
                                   out.emplace_back(r, colours, d.perm());
                               });
  return out;
}

bool is_minimal_coset_representative(const SignedComposition& mu,
                                     const GroupElement& g) {
  const auto gens = generator_set(mu);
  for (int i : gens.t_indices)
    if (g.colour(i) > 0) return false;
  for (int i : gens.s_indices)
    if (g.image(i) > g.image(i + 1)) return false;
  return true;
}

std::vector<GroupElement> subgroup_elements(const SignedComposition& mu,
                                            int r) {
  const int n = mu.size();
  const auto bounds = mu.block_bounds();
  // Per-block permutations, composed blockwise into one-line words.
  std::vector<std::vector<int>> onelines{std::vector<int>{}};
  for (int b = 0; b < mu.length(); ++b) {
    int lo = bounds[static_cast<size_t>(b)] + 1,
        hi = bounds[static_cast<size_t>(b) + 1];
    std::vector<int> block(static_cast<size_t>(hi - lo + 1));
    std::iota(block.begin(), block.end(), lo);
    std::vector<std::vector<int>> grown;
    do {
      for (const auto& prefix : onelines) {
        auto next = prefix;
        next.insert(next.end(), block.begin(), block.end());
        grown.push_back(std::move(next));
      }
    } while (std::next_permutation(block.begin(), block.end()));
    onelines = std::move(grown);
  }
  // Colours on the positive blocks only.
  std::vector<int> support;
  const auto row = mu.row_of_position();
  for (size_t p = 0; p < row.size(); ++p)
    if (mu.part(row[p]) > 0) support.push_back(static_cast<int>(p));
  std::vector<GroupElement> out;
  for_each_supported_colouring(n, r, support,
                               [&](const std::vector<int>& colours) {
                                 for (const auto& ol : onelines)
                                   out.emplace_back(r, colours, ol);
                               });
  return out;
}

SignedComposition intersection_composition(const SignedComposition& mu,
                                           const SignedComposition& nu,
                                           const GroupElement& d) {
  const int n = mu.size();
  const auto mu_row = mu.row_of_position();
  const auto nu_row = nu.row_of_position();
  std::vector<int> parts;
  int run = 0;
  int prev_mu = -1, prev_nu = -1;
  bool prev_pos = false;
  for (int p = 1; p <= n; ++p) {
    int rm = mu_row[static_cast<size_t>(p - 1)];
    int rn = nu_row[static_cast<size_t>(d.image(p) - 1)];
    if (run > 0 && rm == prev_mu && rn == prev_nu) {
      ++run;
    } else {
      if (run > 0) parts.push_back(prev_pos ? run : -run);
      run = 1;
      prev_mu = rm;
      prev_nu = rn;
      prev_pos = mu.part(rm) > 0 && nu.part(rn) > 0;
    }
  }
  if (run > 0) parts.push_back(prev_pos ? run : -run);
  return SignedComposition(std::move(parts));
}

std::vector<DoubleCosetFamily> double_coset_families(
    const SignedComposition& mu, const SignedComposition& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("double cosets require equal degree");
  const int n = mu.size();
  const auto mu_row = mu.row_of_position();
  const auto nu_row = nu.row_of_position();
  std::vector<DoubleCosetFamily> out;
  for (auto& d : young_transversal(mu)) {
    const GroupElement dinv = d.inverse();
    // Keep d with d^{-1} minimal for the nu^+ blocks: d^{-1} increasing on
    // every block of nu.
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      if (nu_row[static_cast<size_t>(i - 1)] == nu_row[static_cast<size_t>(i)] &&
          dinv.image(i) > dinv.image(i + 1))
        ok = false;
    if (!ok) continue;
    int weight = 0;
    for (int p = 1; p <= n; ++p) {
      if (mu.part(mu_row[static_cast<size_t>(p - 1)]) < 0 &&
          nu.part(nu_row[static_cast<size_t>(d.image(p) - 1)]) < 0)
        ++weight;
    }
    DoubleCosetFamily fam{d, intersection_composition(mu, nu, d),
                          intersection_composition(nu, mu, dinv), weight};
    out.push_back(std::move(fam));
  }
  return out;
}

std::vector<GroupElement> minimal_double_coset_elements(
    const SignedComposition& mu, const SignedComposition& nu, int r) {
  if (r < 2) throw std::invalid_argument("minimal elements require r >= 2");
  const auto mu_row = mu.row_of_position();
  const auto nu_row = nu.row_of_position();
  std::vector<GroupElement> out;
  for (const auto& fam : double_coset_families(mu, nu)) {
    std::vector<int> support;
    for (int p = 1; p <= mu.size(); ++p)
      if (mu.part(mu_row[static_cast<size_t>(p - 1)]) < 0 &&
          nu.part(nu_row[static_cast<size_t>(fam.d.image(p) - 1)]) < 0)
        support.push_back(p - 1);
    for_each_supported_colouring(mu.size(), r, support,
                                 [&](const std::vector<int>& colours) {
                                   out.emplace_back(r, colours, fam.d.perm());
                                 });
  }
  return out;
}

long long double_coset_count(const SignedComposition& mu,
                             const SignedComposition& nu, int r) {
  if (r < 2) throw std::invalid_argument("double coset count requires r >= 2");
  const auto mu_row = mu.row_of_position();
  const auto nu_row = nu.row_of_position();
  long long total = 0;
  for (const auto& fam : double_coset_families(mu, nu)) {
    // Colour patterns on each run of weight positions sharing a block pair
    // must be weakly sorted, giving binom(r+s-1, s) choices per run of size s.
    long long families = 1;
    int run = 0;
    int prev_mu = -1, prev_nu = -1;
    auto flush = [&] {
      if (run > 0) families *= binomial(r + run - 1, run);
      run = 0;
    };
    for (int p = 1; p <= mu.size(); ++p) {
      int rm = mu_row[static_cast<size_t>(p - 1)];
      int rn = nu_row[static_cast<size_t>(fam.d.image(p) - 1)];
      if (mu.part(rm) < 0 && nu.part(rn) < 0) {
        if (run > 0 && (rm != prev_mu || rn != prev_nu)) flush();
        ++run;
        prev_mu = rm;
        prev_nu = rn;
      } else {
        flush();
      }
    }
    flush();
    total += families;
  }
  return total;
}

std::vector<GroupElement> mak_transversal(const SignedComposition& mu, int r) {
  if (r < 2) throw std::invalid_argument("transversal requires r >= 2");
  const int n = mu.size();
  const auto bounds = mu.block_bounds();
  // Working set of partial products; grows one bracket factor at a time.
  std::vector<GroupElement> partial{GroupElement(r, n)};
  for (int j = mu.length() - 1; j >= 0; --j) {
    if (mu.part(j) >= 0) continue;
    const int lo = bounds[static_cast<size_t>(j)] + 1;
    const int hi = bounds[static_cast<size_t>(j) + 1];
    for (int i = hi; i >= lo; --i) {
      // Bracket factor {1} union { s_lo s_(lo+1) ... s_(i-1) t_i^k : 0<k<r }.
      std::vector<GroupElement> bracket{GroupElement(r, n)};
      GroupElement climb(r, n);
      for (int a = lo; a < i; ++a) climb = climb * GroupElement::s(r, n, a);
      for (int k = 1; k < r; ++k)
        bracket.push_back(climb * GroupElement::t(r, n, i, k));
      std::vector<GroupElement> grown;
      grown.reserve(partial.size() * bracket.size());
      for (const auto& head : partial)
        for (const auto& f : bracket) grown.push_back(head * f);
      partial = std::move(grown);
    }
  }
  std::vector<GroupElement> out;
  for (const auto& head : partial)
    for (const auto& d : young_transversal(mu, r)) out.push_back(head * d);
  return out;
}

bool is_right_transversal(const std::vector<GroupElement>& elements,
                          const SignedComposition& mu, int r) {
  const long long order = group_order(r, mu.size());
  std::vector<char> seen(static_cast<size_t>(order), 0);
  const auto subgroup = subgroup_elements(mu, r);
  if (static_cast<long long>(subgroup.size()) *
          static_cast<long long>(elements.size()) !=
      order)
    return false;
  for (const auto& h : subgroup)
    for (const auto& e : elements) {
      long long idx = element_index(h * e);
      if (seen[static_cast<size_t>(idx)]) return false;
      seen[static_cast<size_t>(idx)] = 1;
    }
  return true;
}

}  // namespace cycsol
