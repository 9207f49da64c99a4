#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklab/jack.hpp"

using namespace jacklab;

static RationalFunction alpha() { return RationalFunction(Poly::x()); }

TEST_CASE("monomial to power-sum at small degree") {
  SymFunc m11 = monomial_in_powersum(Partition{1, 1});
  CHECK(m11.at(Partition{1, 1}) == RationalFunction(Rat(1, 2)));
  CHECK(m11.at(Partition{2}) == RationalFunction(Rat(-1, 2)));
  SymFunc m2 = monomial_in_powersum(Partition{2});
  CHECK(m2.at(Partition{2}) == RationalFunction(1));
  CHECK(m2.at(Partition{1, 1}).is_zero());
  SymFunc m1 = monomial_in_powersum(Partition{1});
  CHECK(m1.at(Partition{1}) == RationalFunction(1));
}

TEST_CASE("inner product on power sums") {
  SymFunc p2, p11;
  p2.n = p11.n = 2;
  p2.coeff[Partition{2}] = RationalFunction(1);
  p11.coeff[Partition{1, 1}] = RationalFunction(1);
  CHECK(inner_product(p2, p2) == RationalFunction(Poly::monomial(1, 2)));       // 2a
  CHECK(inner_product(p11, p11) == RationalFunction(Poly::monomial(2, 2)));     // 2a^2
  CHECK(inner_product(p2, p11).is_zero());
  SymFunc bad = p2;
  bad.n = 3;
  CHECK_THROWS(inner_product(p2, bad));
}

TEST_CASE("jack at n <= 2 matches hand values") {
  SymFunc j1 = jack(Partition{1});
  CHECK(j1.at(Partition{1}) == RationalFunction(1));

  SymFunc j2 = jack(Partition{2});
  CHECK(j2.at(Partition{1, 1}) == RationalFunction(1));
  CHECK(j2.at(Partition{2}) == alpha());

  SymFunc j11 = jack(Partition{1, 1});
  CHECK(j11.at(Partition{1, 1}) == RationalFunction(1));
  CHECK(j11.at(Partition{2}) == RationalFunction(-1));
}

TEST_CASE("theta values") {
  CHECK(theta(Partition{2}, Partition{2}) == alpha());
  CHECK(theta(Partition{2}, Partition{1, 1}) == RationalFunction(-1));
  CHECK(theta(Partition{1, 1}, Partition{1, 1}) == RationalFunction(1));
  CHECK_THROWS_WITH(theta(Partition{2}, Partition{2, 1}), "size mismatch");
  // [p_{1^n}] J_la = 1 for every la (normalization in the p basis)
  for (const auto& la : all_partitions(5))
    CHECK(theta(Partition{1, 1, 1, 1, 1}, la) == RationalFunction(1));
}

TEST_CASE("jack norms") {
  Poly a = Poly::x();
  CHECK(jack_norm(Partition{1}) == RationalFunction(a));
  CHECK(jack_norm(Partition{2}) ==
        RationalFunction(Poly::monomial(2, 2) * (a + Poly::constant(1))));  // 2a^2(a+1)
  CHECK(jack_norm(Partition{1, 1}) ==
        RationalFunction(Poly::monomial(1, 2) * (a + Poly::constant(1))));  // 2a(a+1)
}

TEST_CASE("jack axioms for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const JackTable& t = jack_table(n);
    size_t k = t.parts.size();
    Rat nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    for (size_t i = 0; i < k; ++i) {
      // dominance triangularity in the m basis, diagonal nonzero
      for (size_t j = 0; j < k; ++j) {
        RationalFunction mc;
        for (size_t q = 0; q < k; ++q)
          if (t.p_to_m[q][j] != 0) mc += t.jack_p[i][q] * RationalFunction(t.p_to_m[q][j]);
        if (i == j) CHECK(!mc.is_zero());
        if (!mc.is_zero()) CHECK(dominance_leq(t.parts[j], t.parts[i]));
        // normalization [m_{1^n}] = n!
        if (t.parts[j].length() == n) CHECK(mc == RationalFunction(nfact));
      }
      // orthogonality
      for (size_t j = i + 1; j < k; ++j)
        CHECK(inner_product(jack(t.parts[i]), jack(t.parts[j])).is_zero());
    }
  }
}

TEST_CASE("theta matrix invertible for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    const JackTable& t = jack_table(n);
    size_t k = t.parts.size();
    // exact determinant by elimination over Q(alpha)
    std::vector<std::vector<RationalFunction>> m(k, std::vector<RationalFunction>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m[i][j] = t.jack_p[i][j];
    RationalFunction det(1);
    for (size_t col = 0; col < k; ++col) {
      size_t piv = col;
      while (piv < k && m[piv][col].is_zero()) ++piv;
      REQUIRE(piv < k);
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (size_t r = col + 1; r < k; ++r) {
        if (m[r][col].is_zero()) continue;
        RationalFunction f = m[r][col] / m[col][col];
        for (size_t j = col; j < k; ++j) m[r][j] -= f * m[col][j];
      }
    }
    CHECK(!det.is_zero());
  }
}

TEST_CASE("alpha = 1 specialization gives integer z-weighted characters, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const JackTable& t = jack_table(n);
    for (const auto& la : t.parts)
      for (const auto& mu : t.parts) {
        RationalFunction th = theta(mu, la);
        REQUIRE(bool(th.den.eval(1) != 0));
        Rat v = th.num.eval(1) / th.den.eval(1) * Rat((long)z(mu));
        CHECK(v.get_den() == 1);
      }
  }
}
