#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklab/scalars.hpp"

#include <cstdlib>

using namespace jacklab;

static Poly apoly(std::initializer_list<int> asc) {
  std::vector<Rat> c;
  for (int x : asc) c.emplace_back(x);
  return Poly(std::move(c));
}

TEST_CASE("poly arithmetic") {
  Poly x = Poly::x();
  Poly p = x * x - Poly::constant(1);       // x^2 - 1
  Poly q = x + Poly::constant(1);           // x + 1
  Poly quo, rem;
  Poly::divmod(p, q, quo, rem);
  CHECK(rem.is_zero());
  CHECK(quo == x - Poly::constant(1));
  CHECK(Poly::gcd(p, q) == q);
  CHECK(p.eval(3) == 8);
  CHECK(p.shift_arg(1) == x * x + x * Rat(2));  // (x+1)^2 - 1
  CHECK(apoly({1, 2, 1}) == q * q);
  CHECK(p.degree() == 2);
  CHECK(Poly().degree() == -1);
  CHECK(p.str("a") == "a^2 - 1");
}

TEST_CASE("rational function reduction and field ops") {
  Poly x = Poly::x();
  RationalFunction f(x * x - Poly::constant(1), x + Poly::constant(1));
  CHECK(f == RationalFunction(x - Poly::constant(1)));  // cancellation
  CHECK(f.is_polynomial());

  RationalFunction g(Poly::constant(1), x);  // 1/x
  CHECK_FALSE(g.is_polynomial());
  CHECK(g * RationalFunction(x) == RationalFunction(1));
  CHECK(g + g == RationalFunction(Poly::constant(2), x));
  CHECK((g - g).is_zero());

  // denominator kept monic
  RationalFunction h(Poly::constant(3), x * Rat(2));
  CHECK(h.den == x);
  CHECK(h.num == Poly::constant(Rat(3, 2)));
}

TEST_CASE("alpha_to_beta") {
  Poly x = Poly::x();
  CHECK(alpha_to_beta(RationalFunction(x - Poly::constant(1))) == Poly::x());
  CHECK(alpha_to_beta(RationalFunction(x * x - Poly::constant(1), x + Poly::constant(1))) ==
        Poly::x());
  CHECK_THROWS_WITH(alpha_to_beta(RationalFunction(Poly::constant(1), x)),
                    "not a polynomial in beta");
  // round trip on dense polynomials
  srand(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rat> c;
    for (int i = 0; i <= 12; ++i) c.emplace_back(rand() % 19 - 9, 1 + rand() % 5);
    for (auto& a : c) a.canonicalize();
    Poly p(std::move(c));
    CHECK(beta_to_alpha(alpha_to_beta(RationalFunction(p))) == p);
  }
}

TEST_CASE("laurent basics") {
  LaurentA d = LaurentA::delta_const();
  CHECK(d.degree() == 1);
  CHECK(d.valuation() == -1);
  CHECK((d + LaurentA::gamma_const()).is_zero());
  LaurentA f = LaurentA::monomial(2, 3) + LaurentA::monomial(-1, 1);
  CHECK(f.coeff(2) == 3);
  CHECK(f.coeff(0) == 0);
  CHECK(f.str() == "3*A^2 + A^-1");
  CHECK((d * d) == LaurentA::monomial(2, 1) - LaurentA::constant(2) + LaurentA::monomial(-2, 1));
}

TEST_CASE("a_top_coefficient") {
  LaurentA f = LaurentA::monomial(2, 3) + LaurentA::monomial(-1, 1);
  CHECK(a_top_coefficient(f, 2) == 3);
  CHECK(a_top_coefficient(LaurentA::constant(5), 2) == 0);
  CHECK_THROWS_WITH(a_top_coefficient(LaurentA::monomial(3, 1), 2), "degree bound violated");
}

TEST_CASE("laurent_to_delta") {
  CHECK(laurent_to_delta(LaurentA::delta_const()) == Poly::x());
  // A^2 - 2 + A^-2 = delta^2
  LaurentA f = LaurentA::monomial(2, 1) - LaurentA::constant(2) + LaurentA::monomial(-2, 1);
  CHECK(laurent_to_delta(f) == Poly::x() * Poly::x());
  CHECK_THROWS_WITH(laurent_to_delta(LaurentA::monomial(1, 1)), "not expressible in delta");

  // round trip on random delta-polynomials of degree <= 12
  srand(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rat> c;
    for (int i = 0; i <= 12; ++i) c.emplace_back(rand() % 15 - 7);
    Poly g(std::move(c));
    CHECK(laurent_to_delta(delta_to_laurent(g)) == g);
  }
}

TEST_CASE("laurent fraction bridge") {
  LaurentA f = LaurentA::monomial(2, 3) + LaurentA::monomial(-1, 1);
  CHECK(laurent_from_fraction(fraction_from_laurent(f)) == f);
  CHECK(fraction_from_laurent(LaurentA()).is_zero());
  CHECK(laurent_from_fraction(RationalFunction(Poly::x())) == LaurentA::monomial(1, 1));
}

TEST_CASE("alpha substitution into A") {
  Poly x = Poly::x();
  LaurentA f = laurent_from_alpha(x * x + Poly::constant(2));  // A^4 + 2
  CHECK(f == LaurentA::monomial(4, 1) + LaurentA::constant(2));
}

TEST_CASE("binom") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(0, 0) == 1);
}
