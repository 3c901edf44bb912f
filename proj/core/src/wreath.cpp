#include "cycsol/wreath.hpp"

#include <algorithm>
#include <numeric>

namespace cycsol {

GroupElement::GroupElement(int r, std::vector<int> colours,
                           std::vector<int> perm)
    : r_(check_r(r)),
      n_(static_cast<int>(perm.size())),
      colours_(std::move(colours)),
      perm_(std::move(perm)) {
  if (colours_.size() != perm_.size())
    throw std::invalid_argument("colour vector and permutation sizes differ");
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  for (int v : perm_) {
    if (v < 1 || v > n_ || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<size_t>(v - 1)] = 1;
  }
  for (int& c : colours_) {
    c %= r_;
    if (c < 0) c += r_;
  }
}

GroupElement GroupElement::t(int r, int n, int i, int power) {
  if (i < 1 || i > n) throw std::invalid_argument("t-generator index out of range");
  GroupElement g(r, n);
  g.colours_[static_cast<size_t>(i - 1)] = ((power % r) + r) % r;
  return g;
}

GroupElement GroupElement::s(int r, int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("s-generator index out of range");
  GroupElement g(r, n);
  std::swap(g.perm_[static_cast<size_t>(i - 1)], g.perm_[static_cast<size_t>(i)]);
  return g;
}

bool GroupElement::is_identity() const {
  for (int c : colours_)
    if (c != 0) return false;
  for (int i = 0; i < n_; ++i)
    if (perm_[static_cast<size_t>(i)] != i + 1) return false;
  return true;
}

bool GroupElement::is_permutation() const {
  for (int c : colours_)
    if (c != 0) return false;
  return true;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (r_ != o.r_ || n_ != o.n_)
    throw std::invalid_argument("cannot multiply across different groups");
  GroupElement out(r_, n_);
  // (t^a v)(t^b w) = t^c (vw) where c_i = a_i + b_{i^v}: pulling t^b through v
  // re-indexes the colours by v.
  for (int i = 1; i <= n_; ++i) {
    int c = colour(i) + o.colours_[static_cast<size_t>(image(i) - 1)];
    out.colours_[static_cast<size_t>(i - 1)] = c % r_;
    out.perm_[static_cast<size_t>(i - 1)] =
        o.perm_[static_cast<size_t>(image(i) - 1)];
  }
  return out;
}

GroupElement GroupElement::inverse() const {
  GroupElement out(r_, n_);
  // (t^a w)^{-1} = t^b w^{-1} with b_{i^w} = -a_i.
  for (int i = 1; i <= n_; ++i) {
    out.perm_[static_cast<size_t>(image(i) - 1)] = i;
    out.colours_[static_cast<size_t>(image(i) - 1)] =
        (r_ - colour(i)) % r_;
  }
  return out;
}

int GroupElement::permutation_inversions() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (perm_[static_cast<size_t>(i)] > perm_[static_cast<size_t>(j)]) ++inv;
  return inv;
}

int GroupElement::length() const {
  int len = permutation_inversions();
  for (int c : colours_) len += c;
  return len;
}

DescentData GroupElement::descent_data() const {
  DescentData d;
  for (int i = 1; i <= n_; ++i)
    if (colour(i) > 0) d.colour_support.push_back(i);
  for (int i = 1; i < n_; ++i)
    if (image(i) > image(i + 1)) d.descents.push_back(i);
  return d;
}

std::vector<GroupElement::WordLetter> GroupElement::to_word() const {
  // The identity word 1, 2, ..., n acted on from the right by t^alpha w:
  // letter i becomes the value i^w with colour exponent alpha_i.
  std::vector<WordLetter> w(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    w[static_cast<size_t>(i - 1)] = {image(i), colour(i)};
  return w;
}

GroupElement GroupElement::from_word(int r,
                                     const std::vector<WordLetter>& word) {
  int n = static_cast<int>(word.size());
  std::vector<int> colours(static_cast<size_t>(n)), perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    perm[static_cast<size_t>(i)] = word[static_cast<size_t>(i)].first;
    colours[static_cast<size_t>(i)] = word[static_cast<size_t>(i)].second;
  }
  return GroupElement(r, std::move(colours), std::move(perm));
}

GroupElement GroupElement::with_r(int new_r) const {
  return GroupElement(new_r, colours_, perm_);
}

std::string GroupElement::to_string() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (colour(i) == 0) continue;
    out += "t" + std::to_string(i);
    if (colour(i) > 1) out += "^" + std::to_string(colour(i));
    out += " ";
  }
  out += "[";
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += ",";
    out += std::to_string(image(i));
  }
  return out + "]";
}

size_t GroupElement::hash() const {
  size_t h = 1469598103934665603ull;
  for (int c : colours_) h = (h ^ static_cast<size_t>(c)) * 1099511628211ull;
  for (int v : perm_) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
  return h;
}

long long group_order(int r, int n) {
  long long order = 1;
  for (int i = 1; i <= n; ++i) order *= i;
  for (int i = 0; i < n; ++i) order *= r;
  return order;
}

std::vector<GroupElement> enumerate_group(int r, int n) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(group_order(r, n)));
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> colours(static_cast<size_t>(n), 0);
    while (true) {
      out.emplace_back(r, colours, perm);
      int i = 0;
      while (i < n) {
        if (++colours[static_cast<size_t>(i)] < r) break;
        colours[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

long long element_index(const GroupElement& g) {
  const int n = g.n();
  // Lexicographic rank of the one-line word among permutations.
  std::vector<long long> factorial(static_cast<size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i)
    factorial[static_cast<size_t>(i)] = factorial[static_cast<size_t>(i) - 1] * i;
  long long rank = 0;
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int v = 1; v < g.image(i); ++v)
      if (!used[static_cast<size_t>(v - 1)]) ++smaller;
    rank += smaller * factorial[static_cast<size_t>(n - i)];
    used[static_cast<size_t>(g.image(i) - 1)] = 1;
  }
  // Colours vary fastest, position 1 the fastest digit.
  long long colour_rank = 0;
  for (int i = n; i >= 1; --i)
    colour_rank = colour_rank * g.r() + g.colour(i);
  long long colours_per_perm = 1;
  for (int i = 0; i < n; ++i) colours_per_perm *= g.r();
  return rank * colours_per_perm + colour_rank;
}

}  // namespace cycsol
