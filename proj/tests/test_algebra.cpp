// Coefficient rings, algebra elements in the E-basis, the multiplication at a
// chosen parameter, the regular representation, and the distinguished
// subalgebras / ideals.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cycsol/algebra.hpp"
#include "cycsol/coefficient.hpp"
#include "cycsol/signed_composition.hpp"

using namespace cycsol;

namespace {

SignedComposition sc(std::initializer_list<int> parts) {
  return SignedComposition(std::vector<int>(parts));
}

using Matrix = std::vector<std::vector<Coefficient>>;

Matrix matmul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix out(n, std::vector<Coefficient>(n, Coefficient(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST_CASE("coefficient kinds and arithmetic") {
  CHECK(Coefficient(0).is_zero());
  CHECK(Coefficient(1).is_one());
  CHECK((Coefficient(2) + Coefficient(3)).as_integer() == 5);
  CHECK((Coefficient(2) * Coefficient(-3)).as_integer() == -6);
  CHECK((-Coefficient(4)).as_integer() == -4);

  const auto half = Coefficient::rational(make_rational(1, 2));
  CHECK((half + half).is_one());
  CHECK((half * Coefficient::rational(make_rational(2, 3))).as_rational() ==
        make_rational(1, 3));

  CHECK(Coefficient::mod(7, 5) == Coefficient::mod(2, 5));
  CHECK(ModInt(-3, 5).value == 2);
  CHECK_THROWS_AS(ModInt(1, 1), std::invalid_argument);
  CHECK((Coefficient::mod(2, 5) + Coefficient::mod(4, 5)) ==
        Coefficient::mod(1, 5));
  CHECK((Coefficient::mod(2, 5) * Coefficient::mod(3, 5)) ==
        Coefficient::mod(1, 5));
  CHECK((-Coefficient::mod(2, 5)) == Coefficient::mod(3, 5));

  const auto x = Coefficient::symbol_x();
  CHECK((x * x + Coefficient(1)).as_poly().coeffs() ==
        std::vector<long long>{1, 0, 1});
  CHECK(x.kind() == CoeffKind::Poly);
}

TEST_CASE("integers lift, other mixtures are rejected") {
  // Integer operands adopt the other side's kind.
  CHECK((Coefficient(1) + Coefficient::rational(make_rational(1, 2))) ==
        Coefficient::rational(make_rational(3, 2)));
  CHECK((Coefficient(3) + Coefficient::mod(4, 5)) == Coefficient::mod(2, 5));
  CHECK((Coefficient(2) * Coefficient::symbol_x()).as_poly() ==
        2 * Polynomial::x());

  // Cross-kind equality aligns the same way.
  CHECK(Coefficient(1) == Coefficient::poly(Polynomial(1)));
  CHECK(Coefficient(1) != Coefficient::symbol_x());

  const auto half = Coefficient::rational(make_rational(1, 2));
  CHECK_THROWS_AS(half + Coefficient::mod(1, 2), CoefficientKindError);
  CHECK_THROWS_AS(half * Coefficient::symbol_x(), CoefficientKindError);
  CHECK_THROWS_AS(Coefficient::mod(1, 2) + Coefficient::mod(1, 3),
                  CoefficientKindError);
  CHECK_THROWS_AS(Coefficient::symbol_x() + Coefficient::mod(0, 7),
                  CoefficientKindError);
  CHECK(Coefficient::mod(1, 2) != Coefficient::mod(1, 3));
}

TEST_CASE("zero_like, one_like, evaluate, printing") {
  const auto m = Coefficient::mod(3, 7);
  CHECK(Coefficient::one_like(m) == Coefficient::mod(1, 7));
  CHECK(Coefficient::zero_like(m).is_zero());
  CHECK(Coefficient::zero_like(m).kind() == CoeffKind::Mod);
  CHECK(Coefficient::zero_like(Coefficient::symbol_x()).kind() ==
        CoeffKind::Poly);
  CHECK(Coefficient::one_like(Coefficient::rational(make_rational(5, 3)))
            .as_rational() == 1);

  const auto p = Polynomial({0, 3, 1});  // x^2 + 3x
  CHECK(Coefficient::evaluate(p, Coefficient(2)).as_integer() == 10);
  CHECK(Coefficient::evaluate(p, Coefficient::mod(2, 5)) ==
        Coefficient::mod(0, 5));
  CHECK(Coefficient::evaluate(p, Coefficient::rational(make_rational(1, 2)))
            .as_rational() == make_rational(7, 4));
  CHECK(Coefficient::evaluate(p, Coefficient::symbol_x()).as_poly() == p);

  CHECK(Coefficient(-5).to_string() == "-5");
  CHECK(Coefficient::mod(2, 5).to_string() == "2 mod 5");
  CHECK(Coefficient::rational(make_rational(1, 2)).to_string() == "1/2");
  CHECK(Coefficient::symbol_x().to_string() == "x");
  CHECK(Coefficient(1).kind_name() == "integer");
  CHECK(Coefficient::mod(1, 2).kind_name() == "mod");
}

TEST_CASE("element container") {
  AlgebraElement a(2);
  CHECK(a.is_zero());
  a.add_term(sc({1, -1}), Coefficient(2));
  a.add_term(sc({2}), Coefficient(1));
  a.add_term(sc({1, -1}), Coefficient(-2));  // cancels away
  CHECK(a.terms().size() == 1);
  CHECK(a.coefficient(sc({2})).as_integer() == 1);
  CHECK(a.coefficient(sc({1, -1})).is_zero());

  const auto b = AlgebraElement::basis(2, sc({-2}), Coefficient(3));
  CHECK((a + b).terms().size() == 2);
  CHECK((a - a).is_zero());
  CHECK(a.scaled(Coefficient(2)).coefficient(sc({2})).as_integer() == 2);
  CHECK(a.scaled(Coefficient(0)).is_zero());
  CHECK(AlgebraElement::unit(3) == AlgebraElement::basis(3, sc({3})));
  CHECK(a.to_string().find("E(2)") != std::string::npos);
}

TEST_CASE("E_(n) is a two-sided identity") {
  const int n = 3;
  const auto one = AlgebraElement::unit(n);
  for (const auto& q : {Coefficient::symbol_x(), Coefficient(2)}) {
    for (const auto& mu : enumerate_signed_compositions(n)) {
      const auto e = AlgebraElement::basis(n, mu);
      CHECK(algebra_multiply(one, e, q) == e);
      CHECK(algebra_multiply(e, one, q) == e);
    }
  }
}

TEST_CASE("products with mixed-sign keys") {
  // E_(1,-1) * E_(1,-1) = x E_(1,-1) + E_(-1,-1).
  const auto e = AlgebraElement::basis(2, sc({1, -1}));
  const auto got = algebra_multiply(e, e, Coefficient::symbol_x());
  auto want = AlgebraElement::basis(2, sc({1, -1}), Coefficient::symbol_x()) +
              AlgebraElement::basis(2, sc({-1, -1}));
  CHECK(got == want);

  // E_(1,1) * E_(-2) = E_(-1,-1): a product of keys with positive tails can
  // land on a negative tail, which is why the closed span constrains the tail
  // to be negative rather than positive.
  const auto swallowed =
      algebra_multiply(AlgebraElement::basis(2, sc({1, 1})),
                       AlgebraElement::basis(2, sc({-2})),
                       Coefficient::symbol_x());
  CHECK(swallowed == AlgebraElement::basis(2, sc({-1, -1})));
}

TEST_CASE("multiplication is associative") {
  std::mt19937 rng(20240817);
  const std::vector<Coefficient> params = {
      Coefficient::symbol_x(), Coefficient(0),      Coefficient(1),
      Coefficient(2),          Coefficient(3),      Coefficient::mod(2, 5)};
  for (int n = 1; n <= 4; ++n) {
    const auto keys = enumerate_signed_compositions(n);
    std::uniform_int_distribution<size_t> pick(0, keys.size() - 1);
    std::uniform_int_distribution<int> coeff(1, 3);
    auto random_element = [&] {
      AlgebraElement out(n);
      for (int t = 0; t < 3; ++t)
        out.add_term(keys[pick(rng)], Coefficient(coeff(rng)));
      return out;
    };
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = random_element(), b = random_element(),
                 c = random_element();
      for (const auto& q : params) {
        CHECK(algebra_multiply(algebra_multiply(a, b, q), c, q) ==
              algebra_multiply(a, algebra_multiply(b, c, q), q));
      }
    }
  }
}

TEST_CASE("regular representation") {
  // Degree 1, parameter 2: basis order (1), (-1); multiplication by E_(-1)
  // sends E_(1) to E_(-1) and E_(-1) to 2 E_(-1).
  const auto a = AlgebraElement::basis(1, sc({-1}));
  const auto m = regular_representation(a, Coefficient(2));
  const Matrix want = {{Coefficient(0), Coefficient(0)},
                       {Coefficient(1), Coefficient(2)}};
  CHECK(m == want);

  // The assignment is multiplicative in degree 2.
  const auto p = AlgebraElement::basis(2, sc({1, -1})) +
                 AlgebraElement::basis(2, sc({2}), Coefficient(2));
  const auto r = AlgebraElement::basis(2, sc({-2})) -
                 AlgebraElement::basis(2, sc({1, 1}));
  const auto q = Coefficient(2);
  CHECK(regular_representation(algebra_multiply(p, r, q), q) ==
        matmul(regular_representation(p, q), regular_representation(r, q)));

  // And the identity maps to the identity matrix.
  const auto id = regular_representation(AlgebraElement::unit(2), q);
  for (size_t i = 0; i < id.size(); ++i)
    for (size_t j = 0; j < id.size(); ++j)
      CHECK(id[i][j] == Coefficient(i == j ? 1 : 0));
}

TEST_CASE("membership predicates") {
  CHECK(subalgebra_membership(AlgebraElement::basis(2, sc({1, 1})),
                              Subalgebra::kPlus));
  CHECK_FALSE(subalgebra_membership(AlgebraElement::basis(2, sc({1, -1})),
                                    Subalgebra::kPlus));
  CHECK(subalgebra_membership(AlgebraElement::basis(2, sc({-1, -1})),
                              Subalgebra::kSameSign));
  CHECK_FALSE(subalgebra_membership(AlgebraElement::basis(2, sc({-1, 1})),
                                    Subalgebra::kSameSign));
  CHECK(subalgebra_membership(AlgebraElement::basis(2, sc({1, -1})),
                              Subalgebra::kTailNegative));
  CHECK(subalgebra_membership(AlgebraElement::basis(2, sc({2})),
                              Subalgebra::kTailNegative));
  CHECK_FALSE(subalgebra_membership(AlgebraElement::basis(2, sc({-1, 1})),
                                    Subalgebra::kTailNegative));
  // The zero element belongs to every subalgebra; a sum belongs only if every
  // key does.
  CHECK(subalgebra_membership(AlgebraElement(2), Subalgebra::kPlus));
  CHECK_FALSE(subalgebra_membership(
      AlgebraElement::basis(2, sc({2})) + AlgebraElement::basis(2, sc({-2})),
      Subalgebra::kPlus));
  // Filtration levels count the positive weight of each key.
  CHECK(subalgebra_membership(AlgebraElement::basis(2, sc({1, -1})),
                              Subalgebra::kFiltration, 1));
  CHECK_FALSE(subalgebra_membership(AlgebraElement::basis(2, sc({1, -1})),
                                    Subalgebra::kFiltration, 0));
}

TEST_CASE("three subalgebras are closed under multiplication") {
  const auto x = Coefficient::symbol_x();
  for (int n = 1; n <= 3; ++n) {
    const auto keys = enumerate_signed_compositions(n);
    for (auto which : {Subalgebra::kPlus, Subalgebra::kSameSign,
                       Subalgebra::kTailNegative}) {
      for (const auto& mu : keys) {
        const auto a = AlgebraElement::basis(n, mu);
        if (!subalgebra_membership(a, which)) continue;
        for (const auto& nu : keys) {
          const auto b = AlgebraElement::basis(n, nu);
          if (!subalgebra_membership(b, which)) continue;
          CHECK(subalgebra_membership(algebra_multiply(a, b, x), which));
        }
      }
    }
  }
}

TEST_CASE("filtration levels are two-sided ideals") {
  const auto x = Coefficient::symbol_x();
  for (int n = 1; n <= 3; ++n) {
    const auto keys = enumerate_signed_compositions(n);
    for (int level = 0; level <= n; ++level) {
      for (const auto& mu : keys) {
        if (mu.positive_weight() > level) continue;
        const auto a = AlgebraElement::basis(n, mu);
        for (const auto& nu : keys) {
          const auto b = AlgebraElement::basis(n, nu);
          CHECK(subalgebra_membership(algebra_multiply(a, b, x),
                                      Subalgebra::kFiltration, level));
          CHECK(subalgebra_membership(algebra_multiply(b, a, x),
                                      Subalgebra::kFiltration, level));
        }
      }
    }
  }
}

TEST_CASE("positive projection") {
  const auto a = AlgebraElement::basis(3, sc({-2, 1}), Coefficient(2)) +
                 AlgebraElement::basis(3, sc({1, 1, -1}));
  const auto proj = positive_projection(a);
  CHECK(proj == AlgebraElement::basis(3, sc({2, 1}), Coefficient(2)) +
                    AlgebraElement::basis(3, sc({1, 1, 1})));

  // At parameter 1 the projection respects products.
  const auto one = Coefficient(1);
  for (int n = 1; n <= 3; ++n) {
    const auto keys = enumerate_signed_compositions(n);
    for (const auto& mu : keys)
      for (const auto& nu : keys) {
        const auto a1 = AlgebraElement::basis(n, mu);
        const auto b1 = AlgebraElement::basis(n, nu);
        CHECK(positive_projection(algebra_multiply(a1, b1, one)) ==
              algebra_multiply(positive_projection(a1), positive_projection(b1),
                               one));
      }
  }
}
