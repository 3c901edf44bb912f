#pragma once

// Elements of the wreath product G(r,1,n) = (Z/rZ) wr S_n in normal form
// t^alpha * w: a colour vector alpha in [0,r)^n followed by a permutation w of
// {1..n}.  Permutations act on the right and are written exponentially, so
// i^(vw) = (i^v)^w.  Moving a colour through a permutation follows the
// exchange rule t_i w = w t_{i^w}.
//
// Generators: t_i raises the colour at position i; s_i swaps positions i and
// i+1.  The length of t^alpha w with respect to the generating set
// {t_1..t_n, s_1..s_(n-1)} is |alpha| + inv(w).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycsol {

struct DescentData {
  std::vector<int> colour_support;  // 1-based positions i with alpha_i > 0
  std::vector<int> descents;        // 1-based indices i with i^w > (i+1)^w

  bool operator==(const DescentData& o) const {
    return colour_support == o.colour_support && descents == o.descents;
  }
};

class GroupElement {
 public:
  // A letter of the word picture: position value with a colour exponent.
  using WordLetter = std::pair<int, int>;  // (value in 1..n, colour in [0,r))

  GroupElement() : r_(1), n_(0) {}
  GroupElement(int r, int n)  // identity
      : r_(check_r(r)),
        n_(check_n(n)),
        colours_(static_cast<size_t>(n), 0),
        perm_(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) perm_[static_cast<size_t>(i)] = i + 1;
  }
  GroupElement(int r, std::vector<int> colours, std::vector<int> perm);

  static GroupElement t(int r, int n, int i, int power = 1);  // 1 <= i <= n
  static GroupElement s(int r, int n, int i);                 // 1 <= i <= n-1

  int r() const { return r_; }
  int n() const { return n_; }
  const std::vector<int>& colours() const { return colours_; }
  const std::vector<int>& perm() const { return perm_; }
  int colour(int i) const { return colours_[static_cast<size_t>(i - 1)]; }
  int image(int i) const { return perm_[static_cast<size_t>(i - 1)]; }  // i^w

  bool is_identity() const;
  bool is_permutation() const;  // all colours zero

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;

  int length() const;  // |alpha| + inv(w)
  int permutation_inversions() const;
  DescentData descent_data() const;

  // The image of the identity word 1, 2, ..., n under right multiplication:
  // letter i becomes (i^w, alpha_i).
  std::vector<WordLetter> to_word() const;
  static GroupElement from_word(int r, const std::vector<WordLetter>& word);

  // Re-embeds a colour-free element into G(r',1,n).
  GroupElement with_r(int new_r) const;

  bool operator==(const GroupElement& o) const {
    return r_ == o.r_ && colours_ == o.colours_ && perm_ == o.perm_;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  // Colour-vector order first, then one-line order; total within fixed (r,n).
  bool operator<(const GroupElement& o) const {
    if (colours_ != o.colours_) return colours_ < o.colours_;
    return perm_ < o.perm_;
  }

  std::string to_string() const;  // e.g. "t1^2 t3 [2,3,1]"
  size_t hash() const;

 private:
  static int check_r(int r) {
    if (r < 1) throw std::invalid_argument("colour order r must be >= 1");
    return r;
  }
  static int check_n(int n) {
    if (n < 0) throw std::invalid_argument("rank n must be >= 0");
    return n;
  }

  int r_, n_;
  std::vector<int> colours_;  // alpha_i at index i-1, values in [0,r)
  std::vector<int> perm_;     // one-line: i^w at index i-1, values in 1..n
};

struct GroupElementHash {
  size_t operator()(const GroupElement& g) const { return g.hash(); }
};

// |G(r,1,n)| = r^n * n!.
long long group_order(int r, int n);

// Every element, colours varying fastest within each permutation, the
// permutations in one-line lexicographic order.
std::vector<GroupElement> enumerate_group(int r, int n);

// Rank of an element in the enumerate_group order.
long long element_index(const GroupElement& g);

}  // namespace cycsol
