#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace jacklab {

using Rat = mpq_class;

// Dense univariate polynomial over Q; coefficients ascending, no trailing zeros.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(std::vector<Rat> cc) : c(std::move(cc)) { trim(); }

  static Poly constant(const Rat& a);
  static Poly monomial(int k, const Rat& a);  // a*x^k, k >= 0
  static Poly x() { return monomial(1, 1); }

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero
  Rat coeff(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : Rat(0); }
  Rat lead() const { return c.back(); }

  bool operator==(const Poly&) const = default;
  Poly operator-() const;
  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  Poly operator*(const Rat&) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Rat eval(const Rat& a) const;
  Poly shift_arg(const Rat& a) const;  // p(x + a)

  // Euclidean division; the divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(Poly a, Poly b);  // monic

  std::string str(const std::string& var) const;
};

// Reduced fraction num/den of polynomials in alpha; den monic, gcd(num,den)=1.
struct RationalFunction {
  Poly num, den;

  RationalFunction() : num(), den(Poly::constant(1)) {}
  RationalFunction(const Rat& a) : num(Poly::constant(a)), den(Poly::constant(1)) {}
  RationalFunction(int a) : RationalFunction(Rat(a)) {}
  explicit RationalFunction(Poly n) : num(std::move(n)), den(Poly::constant(1)) {}
  RationalFunction(Poly n, Poly d);  // reduces

  bool operator==(const RationalFunction&) const = default;
  bool is_zero() const { return num.is_zero(); }
  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction&) const;
  RationalFunction operator-(const RationalFunction&) const;
  RationalFunction operator*(const RationalFunction&) const;
  RationalFunction operator/(const RationalFunction&) const;  // divisor nonzero
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  bool is_polynomial() const { return den.degree() == 0; }
  Poly as_polynomial() const;  // asserts is_polynomial (den == 1)

  std::string str() const;  // in variable "a" (alpha)
};

// Laurent polynomial in A; no stored zero coefficients.
struct LaurentA {
  std::map<int, Rat> c;  // exponent -> coefficient

  static LaurentA monomial(int e, const Rat& a);
  static LaurentA constant(const Rat& a) { return monomial(0, a); }
  static LaurentA delta_const();  // A - A^{-1}
  static LaurentA gamma_const();  // -A + A^{-1}

  bool operator==(const LaurentA&) const = default;
  bool is_zero() const { return c.empty(); }
  int degree() const;     // max exponent; INT_MIN for zero
  int valuation() const;  // min exponent; INT_MAX for zero
  Rat coeff(int e) const;

  LaurentA operator-() const;
  LaurentA operator+(const LaurentA&) const;
  LaurentA operator-(const LaurentA&) const;
  LaurentA operator*(const LaurentA&) const;
  LaurentA operator*(const Rat&) const;
  LaurentA& operator+=(const LaurentA& o) { return *this = *this + o; }
  LaurentA& operator-=(const LaurentA& o) { return *this = *this - o; }
  LaurentA& operator*=(const LaurentA& o) { return *this = *this * o; }

  LaurentA pow(int k) const;  // k >= 0

  std::string str() const;
};

using BetaPolynomial = Poly;   // variable beta = alpha - 1
using DeltaPolynomial = Poly;  // variable delta = A - A^{-1}

// Substitutes alpha = A^2.
LaurentA laurent_from_alpha(const Poly& alpha_poly);

// Coefficient of A^d; throws "degree bound violated" when degree(f) > d.
Rat a_top_coefficient(const LaurentA& f, int d);

// f(beta + 1) when f is a polynomial; throws "not a polynomial in beta".
BetaPolynomial alpha_to_beta(const RationalFunction& f);

// Inverse substitution beta = alpha - 1.
Poly beta_to_alpha(const BetaPolynomial& g);

// The unique g with g(A - A^{-1}) = f; throws "not expressible in delta".
DeltaPolynomial laurent_to_delta(const LaurentA& f);

// Substitutes delta = A - A^{-1}.
LaurentA delta_to_laurent(const DeltaPolynomial& g);

// Laurent polynomial as a fraction num/A^k (variable read as A).
RationalFunction fraction_from_laurent(const LaurentA& f);

// Fraction whose reduced denominator is a monomial in A; asserts otherwise.
LaurentA laurent_from_fraction(const RationalFunction& f);

// Exact n choose k as a rational (0 for k < 0 or k > n); n >= 0.
Rat binom(long n, long k);

}  // namespace jacklab
