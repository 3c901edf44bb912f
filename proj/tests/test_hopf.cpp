// The graded tower: concatenation product, splitting coproduct, primitive
// basis, antipode, the internal degreewise product, and the group-level
// coproduct.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>
#include <vector>

#include "cycsol/hopf.hpp"

using namespace cycsol;

namespace {

SignedComposition sc(std::initializer_list<int> parts) {
  return SignedComposition(std::vector<int>(parts));
}

GradedElement e(std::initializer_list<int> parts) {
  return GradedElement::basis(sc(parts));
}

// All keys of every degree from 0 through max_n.
std::vector<SignedComposition> keys_through(int max_n) {
  std::vector<SignedComposition> out = {SignedComposition()};
  for (int n = 1; n <= max_n; ++n)
    for (const auto& mu : enumerate_signed_compositions(n)) out.push_back(mu);
  return out;
}

using Triple = std::tuple<SignedComposition, SignedComposition, SignedComposition>;

// (coproduct ⊗ id) applied after coproduct, collected as triples.
std::map<Triple, Rational> split_left_first(const SignedComposition& mu) {
  std::map<Triple, Rational> out;
  const auto once = coproduct(GradedElement::basis(mu));
  for (const auto& [pair, c] : once.terms()) {
    const auto again = coproduct(GradedElement::basis(pair.first));
    for (const auto& [inner, c2] : again.terms()) {
      auto& slot = out[{inner.first, inner.second, pair.second}];
      slot += c * c2;
      if (slot == 0) out.erase({inner.first, inner.second, pair.second});
    }
  }
  return out;
}

// (id ⊗ coproduct) applied after coproduct, collected as triples.
std::map<Triple, Rational> split_right_first(const SignedComposition& mu) {
  std::map<Triple, Rational> out;
  const auto once = coproduct(GradedElement::basis(mu));
  for (const auto& [pair, c] : once.terms()) {
    const auto again = coproduct(GradedElement::basis(pair.second));
    for (const auto& [inner, c2] : again.terms()) {
      auto& slot = out[{pair.first, inner.first, inner.second}];
      slot += c * c2;
      if (slot == 0) out.erase({pair.first, inner.first, inner.second});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("graded containers") {
  auto a = e({1, -1});
  CHECK_FALSE(a.is_zero());
  CHECK(a.coefficient(sc({1, -1})) == 1);
  a.add(sc({1, -1}), Rational(-1));
  CHECK(a.is_zero());

  const auto b = e({2}) + e({1}).scaled(Rational(3));
  CHECK(b.component(1) == e({1}).scaled(Rational(3)));
  CHECK(b.component(2) == e({2}));
  CHECK(b.component(3).is_zero());
  CHECK(b.max_degree() == 2);
  CHECK(GradedElement::one().coefficient(SignedComposition()) == 1);
  CHECK((b - b).is_zero());
}

TEST_CASE("concatenation product") {
  CHECK(shuffle_product(e({1, -2}), e({3})) == e({1, -2, 3}));
  CHECK(shuffle_product(GradedElement::one(), e({-2})) == e({-2}));
  CHECK(shuffle_product(e({-2}), GradedElement::one()) == e({-2}));
  // Bilinear over sums, and associative.
  const auto s = e({1}) + e({-1});
  CHECK(shuffle_product(s, e({2})) == e({1, 2}) + e({-1, 2}));
  CHECK(shuffle_product(shuffle_product(e({1}), e({-2})), e({1, 1})) ==
        shuffle_product(e({1}), shuffle_product(e({-2}), e({1, 1}))));
}

TEST_CASE("coproduct of a mixed-sign key") {
  // Delta E_(1,-1) has the four sign-compatible splits.
  const auto d = coproduct(e({1, -1}));
  GradedRationalTensor want;
  want.add({sc({}), sc({1, -1})}, 1);
  want.add({sc({1}), sc({-1})}, 1);
  want.add({sc({-1}), sc({1})}, 1);
  want.add({sc({1, -1}), sc({})}, 1);
  CHECK(d == want);

  // A part of size two splits through its interior as well.
  const auto d2 = coproduct(e({-2}));
  GradedRationalTensor want2;
  want2.add({sc({}), sc({-2})}, 1);
  want2.add({sc({-1}), sc({-1})}, 1);
  want2.add({sc({-2}), sc({})}, 1);
  CHECK(d2 == want2);
}

TEST_CASE("counit laws") {
  CHECK(counit(GradedElement::one()) == 1);
  CHECK(counit(e({1, 1})) == 0);
  for (const auto& mu : keys_through(3)) {
    const auto a = GradedElement::basis(mu);
    const auto d = coproduct(a);
    GradedElement left_stripped, right_stripped;
    for (const auto& [pair, c] : d.terms()) {
      if (pair.first.empty()) left_stripped.add(pair.second, c);
      if (pair.second.empty()) right_stripped.add(pair.first, c);
    }
    CHECK(left_stripped == a);
    CHECK(right_stripped == a);
  }
}

TEST_CASE("coassociativity through degree 3") {
  for (const auto& mu : keys_through(3))
    CHECK(split_left_first(mu) == split_right_first(mu));
}

TEST_CASE("coproduct respects concatenation") {
  for (const auto& mu : keys_through(2))
    for (const auto& nu : keys_through(2)) {
      const auto a = GradedElement::basis(mu), b = GradedElement::basis(nu);
      CHECK(coproduct(shuffle_product(a, b)) ==
            tensor_shuffle_product(coproduct(a), coproduct(b)));
    }
}

TEST_CASE("primitive generators") {
  CHECK(primitive_generator(1) == e({1}));
  CHECK(primitive_generator(-1) == e({-1}));
  CHECK(primitive_generator(2) ==
        e({2}) + e({1, 1}).scaled(make_rational(-1, 2)));
  CHECK(primitive_generator(-2) ==
        e({-2}) + e({-1, -1}).scaled(make_rational(-1, 2)));
  const auto p3 = primitive_generator(3);
  CHECK(p3.coefficient(sc({3})) == 1);
  CHECK(p3.coefficient(sc({1, 2})) == make_rational(-1, 2));
  CHECK(p3.coefficient(sc({2, 1})) == make_rational(-1, 2));
  CHECK(p3.coefficient(sc({1, 1, 1})) == make_rational(1, 3));
  CHECK(p3.terms().size() == 4);

  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    const auto p = primitive_generator(k);
    GradedRationalTensor want;
    for (const auto& [mu, c] : p.terms()) {
      want.add({mu, sc({})}, c);
      want.add({sc({}), mu}, c);
    }
    CHECK(coproduct(p) == want);
  }
}

TEST_CASE("round trip between the two bases") {
  for (const auto& mu : keys_through(3)) {
    const auto a = GradedElement::basis(mu);
    CHECK(expand_from_primitives(expand_in_primitives(a)) == a);
    // The same key read as a primitive word.
    const auto w = Graded<Rational>::basis(mu);
    CHECK(expand_in_primitives(expand_from_primitives(w)) == w);
  }
  // Worked expansions: E_(1,1) = P_1 P_1, and E_(2) = P_2 + (1/2) P_1 P_1.
  const auto pair_word = expand_in_primitives(e({1, 1}));
  CHECK(pair_word == Graded<Rational>::basis(sc({1, 1})));
  const auto two_word = expand_in_primitives(e({2}));
  CHECK(two_word.coefficient(sc({2})) == 1);
  CHECK(two_word.coefficient(sc({1, 1})) == make_rational(1, 2));
  CHECK(two_word.terms().size() == 2);
}

TEST_CASE("antipode") {
  CHECK(antipode(e({1})) == e({1}).scaled(Rational(-1)));
  CHECK(antipode(e({1, -1})) == e({-1, 1}));
  CHECK(antipode(GradedElement::one()) == GradedElement::one());

  // Convolution inverse of the identity: m (S ⊗ id) Delta = counit * unit.
  for (const auto& mu : keys_through(3)) {
    const auto a = GradedElement::basis(mu);
    const auto d = coproduct(a);
    GradedElement folded;
    for (const auto& [pair, c] : d.terms()) {
      const auto piece = shuffle_product(antipode(GradedElement::basis(pair.first)),
                                         GradedElement::basis(pair.second));
      folded = folded + piece.scaled(c);
    }
    CHECK(folded == GradedElement::one().scaled(counit(a)));
  }

  // Anti-homomorphism for the concatenation product.
  for (const auto& mu : keys_through(2))
    for (const auto& nu : keys_through(2)) {
      const auto a = GradedElement::basis(mu), b = GradedElement::basis(nu);
      CHECK(antipode(shuffle_product(a, b)) ==
            shuffle_product(antipode(b), antipode(a)));
    }
}

TEST_CASE("internal product is compatible with the coproduct") {
  const auto q = Polynomial::x();
  for (int n = 1; n <= 3; ++n) {
    for (const auto& mu : enumerate_signed_compositions(n))
      for (const auto& nu : enumerate_signed_compositions(n)) {
        const auto a = Graded<Polynomial>::basis(mu);
        const auto b = Graded<Polynomial>::basis(nu);
        CHECK(coproduct(internal_product(a, b, q)) ==
              tensor_internal_product(coproduct(a), coproduct(b), q));
      }
  }

  // Degreewise: terms of unequal degree annihilate.
  CHECK(internal_product(Graded<Polynomial>::basis(sc({1})),
                         Graded<Polynomial>::basis(sc({2})), q)
            .is_zero());
}

TEST_CASE("group-level coproduct of a worked element") {
  using Word = std::vector<GroupElement::WordLetter>;
  const auto g = GroupElement::from_word(3, Word{{2, 1}, {3, 2}, {1, 0}, {4, 1}});
  const auto terms = group_coproduct(g);
  REQUIRE(terms.size() == 5);

  CHECK(terms[0].first == GroupElement(3, 0));
  CHECK(terms[0].second == g);
  CHECK(terms[1].first == GroupElement::from_word(3, Word{{1, 0}}));
  CHECK(terms[1].second ==
        GroupElement::from_word(3, Word{{1, 1}, {2, 2}, {3, 1}}));
  CHECK(terms[2].first == GroupElement::from_word(3, Word{{2, 1}, {1, 0}}));
  CHECK(terms[2].second == GroupElement::from_word(3, Word{{1, 2}, {2, 1}}));
  CHECK(terms[3].first ==
        GroupElement::from_word(3, Word{{2, 1}, {3, 2}, {1, 0}}));
  CHECK(terms[3].second == GroupElement::from_word(3, Word{{1, 1}}));
  CHECK(terms[4].first == g);
  CHECK(terms[4].second == GroupElement(3, 0));

  // Degrees always complement each other.
  for (size_t m = 0; m < terms.size(); ++m) {
    CHECK(terms[m].first.n() == static_cast<int>(m));
    CHECK(terms[m].second.n() == static_cast<int>(terms.size() - 1 - m));
  }
}
