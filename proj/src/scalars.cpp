#include "jacklab/scalars.hpp"

#include <cassert>
#include <climits>
#include <stdexcept>

namespace jacklab {

Poly Poly::constant(const Rat& a) {
  Poly p;
  if (a != 0) p.c = {a};
  return p;
}

Poly Poly::monomial(int k, const Rat& a) {
  assert(k >= 0);
  Poly p;
  if (a != 0) {
    p.c.assign(k + 1, Rat(0));
    p.c[k] = a;
  }
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.c) a = -a;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c.assign(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.trim();
  return r;
}

Poly Poly::operator*(const Rat& a) const {
  if (a == 0) return Poly();
  Poly r = *this;
  for (auto& x : r.c) x *= a;
  return r;
}

Rat Poly::eval(const Rat& a) const {
  Rat r(0);
  for (size_t i = c.size(); i-- > 0;) r = r * a + c[i];
  return r;
}

Poly Poly::shift_arg(const Rat& a) const {
  // Horner: p(x+a) = (((c_n)(x+a) + c_{n-1})(x+a) + ...)
  Poly r;
  Poly xa = Poly::x() + Poly::constant(a);
  for (size_t i = c.size(); i-- > 0;) r = r * xa + Poly::constant(c[i]);
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  assert(!b.is_zero());
  q = Poly();
  r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rat f = r.lead() / b.lead();
    q += Poly::monomial(k, f);
    r -= b * Poly::monomial(k, f);
  }
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rat inv = 1 / a.lead();
  return a * inv;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    Rat a = c[k];
    if (a == 0) continue;
    if (!s.empty()) s += a > 0 ? " + " : " - ";
    else if (a < 0) s += "-";
    Rat m = abs(a);
    if (m != 1 || k == 0) s += m.get_str();
    if (k > 0) {
      if (m != 1) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

RationalFunction::RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::runtime_error("zero denominator");
  if (num.is_zero()) {
    den = Poly::constant(1);
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num, g, q, r);
    assert(r.is_zero());
    num = q;
    Poly::divmod(den, g, q, r);
    assert(r.is_zero());
    den = q;
  }
  Rat inv = 1 / den.lead();
  num = num * inv;
  den = den * inv;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num = -r.num;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num * o.den + o.num * den, den * o.den);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num * o.num, den * o.den);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::runtime_error("division by zero");
  return RationalFunction(num * o.den, den * o.num);
}

Poly RationalFunction::as_polynomial() const {
  assert(is_polynomial() && den.coeff(0) == 1);
  return num;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num.str("a");
  return "(" + num.str("a") + ")/(" + den.str("a") + ")";
}

LaurentA LaurentA::monomial(int e, const Rat& a) {
  LaurentA f;
  if (a != 0) f.c[e] = a;
  return f;
}

LaurentA LaurentA::delta_const() {
  LaurentA f;
  f.c[1] = 1;
  f.c[-1] = -1;
  return f;
}

LaurentA LaurentA::gamma_const() {
  LaurentA f;
  f.c[1] = -1;
  f.c[-1] = 1;
  return f;
}

int LaurentA::degree() const { return c.empty() ? INT_MIN : c.rbegin()->first; }
int LaurentA::valuation() const { return c.empty() ? INT_MAX : c.begin()->first; }

Rat LaurentA::coeff(int e) const {
  auto it = c.find(e);
  return it == c.end() ? Rat(0) : it->second;
}

LaurentA LaurentA::operator-() const {
  LaurentA r = *this;
  for (auto& [e, a] : r.c) a = -a;
  return r;
}

LaurentA LaurentA::operator+(const LaurentA& o) const {
  LaurentA r = *this;
  for (const auto& [e, a] : o.c) {
    auto it = r.c.find(e);
    if (it == r.c.end()) {
      r.c[e] = a;
    } else {
      it->second += a;
      if (it->second == 0) r.c.erase(it);
    }
  }
  return r;
}

LaurentA LaurentA::operator-(const LaurentA& o) const { return *this + (-o); }

LaurentA LaurentA::operator*(const LaurentA& o) const {
  LaurentA r;
  for (const auto& [e1, a1] : c)
    for (const auto& [e2, a2] : o.c) r.c[e1 + e2] += a1 * a2;
  for (auto it = r.c.begin(); it != r.c.end();)
    it = it->second == 0 ? r.c.erase(it) : std::next(it);
  return r;
}

LaurentA LaurentA::operator*(const Rat& a) const {
  if (a == 0) return LaurentA();
  LaurentA r = *this;
  for (auto& [e, x] : r.c) x *= a;
  return r;
}

LaurentA LaurentA::pow(int k) const {
  assert(k >= 0);
  LaurentA r = constant(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string LaurentA::str() const {
  if (c.empty()) return "0";
  std::string s;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    auto [e, a] = *it;
    if (!s.empty()) s += a > 0 ? " + " : " - ";
    else if (a < 0) s += "-";
    Rat m = abs(a);
    if (m != 1 || e == 0) s += m.get_str();
    if (e != 0) {
      if (m != 1) s += "*";
      s += "A";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

LaurentA laurent_from_alpha(const Poly& alpha_poly) {
  LaurentA f;
  for (int k = 0; k <= alpha_poly.degree(); ++k) {
    Rat a = alpha_poly.coeff(k);
    if (a != 0) f.c[2 * k] = a;
  }
  return f;
}

Rat a_top_coefficient(const LaurentA& f, int d) {
  if (!f.is_zero() && f.degree() > d) throw std::runtime_error("degree bound violated");
  return f.coeff(d);
}

BetaPolynomial alpha_to_beta(const RationalFunction& f) {
  if (!f.is_polynomial()) throw std::runtime_error("not a polynomial in beta");
  return f.as_polynomial().shift_arg(1);  // alpha = beta + 1
}

Poly beta_to_alpha(const BetaPolynomial& g) { return g.shift_arg(-1); }

DeltaPolynomial laurent_to_delta(const LaurentA& f) {
  // Subring test: f(A) = f(-A^{-1}), i.e. coeff(-e) = (-1)^e coeff(e).
  for (const auto& [e, a] : f.c) {
    Rat mirror = f.coeff(-e);
    if (mirror != (e % 2 == 0 ? a : -a)) throw std::runtime_error("not expressible in delta");
  }
  LaurentA rem = f;
  DeltaPolynomial g;
  while (!rem.is_zero()) {
    int k = rem.degree();
    assert(k >= 0);  // symmetry forces a nonnegative top exponent
    Rat a = rem.coeff(k);
    g += Poly::monomial(k, a);
    rem -= LaurentA::delta_const().pow(k) * a;
    assert(rem.is_zero() || rem.degree() < k);
  }
  return g;
}

LaurentA delta_to_laurent(const DeltaPolynomial& g) {
  LaurentA f;
  for (int k = 0; k <= g.degree(); ++k)
    f += LaurentA::delta_const().pow(k) * g.coeff(k);
  return f;
}

RationalFunction fraction_from_laurent(const LaurentA& f) {
  if (f.is_zero()) return RationalFunction();
  int v = std::min(f.valuation(), 0);
  Poly num;
  num.c.assign(f.degree() - v + 1, Rat(0));
  for (const auto& [e, a] : f.c) num.c[e - v] = a;
  num.trim();
  return RationalFunction(num, Poly::monomial(-v, 1));
}

LaurentA laurent_from_fraction(const RationalFunction& f) {
  if (f.is_zero()) return LaurentA();
  // A reduced fraction with Laurent value has a monomial denominator.
  int k = f.den.degree();
  for (int i = 0; i < k; ++i) assert(f.den.coeff(i) == 0);
  assert(f.den.coeff(k) == 1);
  LaurentA r;
  for (int i = 0; i <= f.num.degree(); ++i) {
    Rat a = f.num.coeff(i);
    if (a != 0) r.c[i - k] = a;
  }
  return r;
}

Rat binom(long n, long k) {
  assert(n >= 0);
  if (k < 0 || k > n) return Rat(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return Rat(r);
}

}  // namespace jacklab
