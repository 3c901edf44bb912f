#include "cycsol/hopf.hpp"

#include <algorithm>

namespace cycsol {

namespace {

// Ordinary compositions of m >= 1 (positive parts), in a fixed generation
// order.
std::vector<std::vector<int>> compositions(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(prefix);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      prefix.push_back(p);
      self(self, left - p);
      prefix.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

Rational factorial(int m) {
  Rational f(1);
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

GradedElement primitive_generator(int k) {
  if (k == 0) throw std::invalid_argument("primitive index must be non-zero");
  const int m = k > 0 ? k : -k;
  const int sign = k > 0 ? 1 : -1;
  GradedElement out;
  for (const auto& alpha : compositions(m)) {
    std::vector<int> parts(alpha);
    for (int& p : parts) p *= sign;
    const int len = static_cast<int>(parts.size());
    Rational c = make_rational((len % 2 == 1) ? 1 : -1, len);
    out.add(SignedComposition(std::move(parts)), c);
  }
  return out;
}

Graded<Rational> expand_in_primitives(const GradedElement& a) {
  Graded<Rational> words;
  for (const auto& [mu, c] : a.terms()) {
    // Letterwise: E_k = sum over compositions alpha of |k| of P_alpha/len!,
    // signs following k; concatenate the letter expansions.
    std::map<SignedComposition, Rational> acc{{SignedComposition(), c}};
    for (int i = 0; i < mu.length(); ++i) {
      const int part = mu.part(i);
      const int m = part > 0 ? part : -part;
      const int sign = part > 0 ? 1 : -1;
      std::map<SignedComposition, Rational> next;
      for (const auto& alpha : compositions(m)) {
        std::vector<int> letters(alpha);
        for (int& p : letters) p *= sign;
        const SignedComposition tail{std::move(letters)};
        const Rational scale = 1 / factorial(tail.length());
        for (const auto& [word, v] : acc) {
          const auto key = word.concatenated(tail);
          auto it = next.find(key);
          if (it == next.end())
            next.emplace(key, v * scale);
          else
            it->second += v * scale;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [word, v] : acc)
      if (v != 0) words.add(word, v);
  }
  return words;
}

GradedElement expand_from_primitives(const Graded<Rational>& words) {
  GradedElement out;
  for (const auto& [word, c] : words.terms()) {
    GradedElement product = GradedElement::one();
    for (int i = 0; i < word.length(); ++i)
      product = shuffle_product(product, primitive_generator(word.part(i)));
    out = out + product.scaled(c);
  }
  return out;
}

GradedElement antipode(const GradedElement& a) {
  const auto words = expand_in_primitives(a);
  Graded<Rational> flipped;
  for (const auto& [word, c] : words.terms()) {
    const Rational sign = (word.length() % 2 == 0) ? 1 : -1;
    flipped.add(word.reversed(), c * sign);
  }
  return expand_from_primitives(flipped);
}

std::vector<std::pair<GroupElement, GroupElement>> group_coproduct(
    const GroupElement& g) {
  const int n = g.n();
  const int r = g.r();
  const GroupElement ginv = g.inverse();
  std::vector<std::pair<GroupElement, GroupElement>> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    // The minimal representative d of the coset of w^{-1} under the two-block
    // subgroup sorts the values of w^{-1} over each block.
    std::vector<int> head, tail;
    for (int i = 1; i <= m; ++i) head.push_back(ginv.image(i));
    for (int i = m + 1; i <= n; ++i) tail.push_back(ginv.image(i));
    std::sort(head.begin(), head.end());
    std::sort(tail.begin(), tail.end());
    std::vector<int> d(head);
    d.insert(d.end(), tail.begin(), tail.end());
    // h = d g lies in the two-block subgroup; split it.
    std::vector<int> left_col, left_perm, right_col, right_perm;
    for (int i = 1; i <= n; ++i) {
      const int di = d[static_cast<size_t>(i - 1)];
      const int image = g.image(di);     // i-th one-line entry of d g
      const int colour = g.colour(di);   // colours re-indexed through d
      if (i <= m) {
        left_col.push_back(colour);
        left_perm.push_back(image);
      } else {
        right_col.push_back(colour);
        right_perm.push_back(image - m);
      }
    }
    out.emplace_back(GroupElement(r, std::move(left_col), std::move(left_perm)),
                     GroupElement(r, std::move(right_col), std::move(right_perm)));
  }
  return out;
}

}  // namespace cycsol
