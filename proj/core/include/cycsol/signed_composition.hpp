#pragma once

// Signed compositions: finite sequences of non-zero integers.  A signed
// composition mu of n has parts mu_1, ..., mu_k with |mu_1| + ... + |mu_k| = n.
// Each one indexes a reflection subgroup of the wreath product G(r,1,n): part
// |mu_i| is the size of the i-th block of positions, and the block carries its
// colour subgroup exactly when mu_i > 0.  There are 2*3^(n-1) signed
// compositions of n >= 1.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycsol {

struct GeneratorSet;

class SignedComposition {
 public:
  SignedComposition() = default;  // the empty composition of 0
  explicit SignedComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p == 0)
        throw std::invalid_argument("signed composition parts must be non-zero");
  }
  static SignedComposition parse(const std::string& text);

  int size() const {  // n
    int n = 0;
    for (int p : parts_) n += p > 0 ? p : -p;
    return n;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_.at(static_cast<size_t>(i)); }  // 0-based
  bool empty() const { return parts_.empty(); }

  SignedComposition negated() const {
    std::vector<int> p(parts_);
    for (int& v : p) v = -v;
    return SignedComposition(std::move(p));
  }
  // mu^+: the ordinary composition of absolute values.
  SignedComposition absolutes() const {
    std::vector<int> p(parts_);
    for (int& v : p) v = v > 0 ? v : -v;
    return SignedComposition(std::move(p));
  }
  int positive_weight() const {  // |mu|^+ = sum of the positive parts
    int s = 0;
    for (int p : parts_)
      if (p > 0) s += p;
    return s;
  }
  int negative_weight() const {  // |mu|^- = sum of |negative parts|
    int s = 0;
    for (int p : parts_)
      if (p < 0) s -= p;
    return s;
  }
  bool all_positive() const {
    for (int p : parts_)
      if (p < 0) return false;
    return true;
  }
  bool all_negative() const {
    for (int p : parts_)
      if (p > 0) return false;
    return true;
  }

  // Partial sums of |parts|: k+1 values 0 = b_0 <= b_1 <= ... <= b_k = n.
  std::vector<int> block_bounds() const {
    std::vector<int> b(1, 0);
    b.reserve(parts_.size() + 1);
    for (int p : parts_) b.push_back(b.back() + (p > 0 ? p : -p));
    return b;
  }
  // row_of[p] = 0-based index of the block containing position p+1.
  std::vector<int> row_of_position() const {
    std::vector<int> row;
    row.reserve(static_cast<size_t>(size()));
    for (int i = 0; i < length(); ++i) {
      int w = parts_[static_cast<size_t>(i)];
      if (w < 0) w = -w;
      row.insert(row.end(), static_cast<size_t>(w), i);
    }
    return row;
  }

  // Size of the distinguished generator set: (n - length) + |mu|^+.  This is
  // the primary sort key of the canonical order (larger sets come first).
  int generator_count() const { return size() - length() + positive_weight(); }

  bool is_partition() const {  // parts weakly decreasing
    for (size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i - 1] < parts_[i]) return false;
    return true;
  }

  // Concatenation mu . nu (degree adds).
  SignedComposition concatenated(const SignedComposition& tail) const {
    std::vector<int> p(parts_);
    p.insert(p.end(), tail.parts_.begin(), tail.parts_.end());
    return SignedComposition(std::move(p));
  }
  SignedComposition reversed() const {
    return SignedComposition(std::vector<int>(parts_.rbegin(), parts_.rend()));
  }

  bool operator==(const SignedComposition& o) const { return parts_ == o.parts_; }
  bool operator!=(const SignedComposition& o) const { return parts_ != o.parts_; }

  // Canonical total order.  Compositions of smaller n come first; within fixed
  // n, larger generator_count() first; ties broken lexicographically with the
  // part order  a before b  iff  |a| < |b|, or |a| = |b| and a > b.  On signed
  // partitions of 2 this yields (2), (1,1), (1,-1), (-2), (-1,-1).
  bool operator<(const SignedComposition& o) const {
    int n = size(), m = o.size();
    if (n != m) return n < m;
    int g = generator_count(), h = o.generator_count();
    if (g != h) return g > h;
    size_t k = std::min(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < k; ++i) {
      int a = parts_[i], b = o.parts_[i];
      if (a == b) continue;
      int aa = a > 0 ? a : -a, ab = b > 0 ? b : -b;
      if (aa != ab) return aa < ab;
      return a > b;
    }
    return parts_.size() < o.parts_.size();  // equal n makes this unreachable
  }

  std::string to_string() const {  // "(3,-2)"
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  size_t hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int p : parts_)
      h = h * 1099511628211ull ^ static_cast<size_t>(p + 0x10000);
    return h;
  }

 private:
  std::vector<int> parts_;
};

struct SignedCompositionHash {
  size_t operator()(const SignedComposition& c) const { return c.hash(); }
};

// A sequence of integers that may contain zeros; dropping the zeros yields a
// signed composition.  These index the terms of the coproduct.
class PseudoSignedComposition {
 public:
  PseudoSignedComposition() = default;
  explicit PseudoSignedComposition(std::vector<int> entries)
      : entries_(std::move(entries)) {}

  const std::vector<int>& entries() const { return entries_; }
  int size() const {
    int n = 0;
    for (int p : entries_) n += p > 0 ? p : -p;
    return n;
  }
  // Drops zero entries.
  SignedComposition compressed() const {
    std::vector<int> p;
    p.reserve(entries_.size());
    for (int v : entries_)
      if (v != 0) p.push_back(v);
    return SignedComposition(std::move(p));
  }
  bool operator==(const PseudoSignedComposition& o) const {
    return entries_ == o.entries_;
  }

 private:
  std::vector<int> entries_;
};

// Distinguished generators of the reflection subgroup attached to mu, as
// 1-based indices: t_i for every position i in a block with positive part,
// s_i for every index i with positions i, i+1 in the same block.
struct GeneratorSet {
  std::vector<int> t_indices;
  std::vector<int> s_indices;

  bool operator==(const GeneratorSet& o) const {
    return t_indices == o.t_indices && s_indices == o.s_indices;
  }
  int count() const {
    return static_cast<int>(t_indices.size() + s_indices.size());
  }
};

GeneratorSet generator_set(const SignedComposition& mu);

// All signed compositions of n (n >= 0), in canonical order.
std::vector<SignedComposition> enumerate_signed_compositions(int n);

// The unique representative with weakly decreasing parts of the class of mu
// under reordering of parts.
SignedComposition signed_partition_of(const SignedComposition& mu);

// All ways to write mu = c' + c'' componentwise with c'_i * c''_i >= 0 for
// every i.  There are prod(|mu_i| + 1) splits; the first component varies
// fastest, each coordinate of c' running from 0 towards mu_i.
std::vector<std::pair<PseudoSignedComposition, PseudoSignedComposition>>
sign_compatible_splits(const SignedComposition& mu);

}  // namespace cycsol
