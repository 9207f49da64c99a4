#include "jacklab/characters.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jacklab {

CharacterValue ch(const Partition& pi, const Partition& la) {
  if (pi.empty()) return {LaurentA::constant(1)};
  if (la.size() < pi.size()) return {LaurentA{}};
  int k = la.size() - pi.size();
  RationalFunction th = theta(add_units(pi, k), la);
  assert(th.is_polynomial());
  Rat scale = binom(k + pi.m1(), pi.m1()) * Rat((long)z(pi));
  LaurentA v = laurent_from_alpha(th.as_polynomial()) *
               LaurentA::monomial(-(pi.size() - pi.length()), scale);
  assert(v.is_zero() || v.degree() <= pi.size() - pi.length());
  return {v};
}

long a_top_ch(const Partition& pi, const Partition& la) {
  Rat c = ch(pi, la).value.coeff(pi.size() - pi.length());
  if (c < 0 || c.get_den() != 1) throw std::runtime_error("AtopCh violated");
  return (long)c.get_num().get_si();
}

int g_degree_bound(const Partition& pi, const Partition& sigma, const Partition& mu) {
  auto bound = [&](auto n) { return n(pi) + n(sigma) - n(mu); };
  int b1 = bound([](const Partition& p) { return p.size() + p.length(); });
  int b2 = bound([](const Partition& p) { return p.size() - p.length(); });
  int b3 = bound([](const Partition& p) { return p.size() - p.length() + p.m1(); });
  return std::min({b1, b2, b3});
}

namespace {

StructureConstantTable solve_structure_constants(const Partition& pi, const Partition& sigma) {
  int N = pi.size() + sigma.size();
  StructureConstantTable out;
  std::map<Partition, LaurentA> sol;  // nonzero entries solved so far
  for (int m = 0; m <= N; m++) {
    std::vector<Partition> mus = all_partitions(m);
    int k = (int)mus.size();
    // Rows: diagrams la of size m.  Unknown column c is g^{mus[c]}; entries of size < m
    // are already solved, entries of size > m vanish on la.
    std::vector<std::vector<RationalFunction>> M(k, std::vector<RationalFunction>(k + 1));
    for (int r = 0; r < k; r++) {
      const Partition& la = mus[r];
      LaurentA rhs = ch(pi, la).value * ch(sigma, la).value;
      for (const auto& [nu, val] : sol) rhs -= val * ch(nu, la).value;
      for (int c = 0; c < k; c++) M[r][c] = fraction_from_laurent(ch(mus[c], la).value);
      M[r][k] = fraction_from_laurent(rhs);
    }
    for (int c = 0; c < k; c++) {
      int p = -1;
      for (int r = c; r < k && p < 0; r++)
        if (!M[r][c].is_zero()) p = r;
      if (p < 0) throw std::runtime_error("theta basis degenerate");
      std::swap(M[c], M[p]);
      RationalFunction inv = RationalFunction(1) / M[c][c];
      for (int j = c; j <= k; j++) M[c][j] *= inv;
      for (int r = 0; r < k; r++) {
        if (r == c || M[r][c].is_zero()) continue;
        RationalFunction f = M[r][c];
        for (int j = c; j <= k; j++) M[r][j] -= f * M[c][j];
      }
    }
    for (int c = 0; c < k; c++) {
      LaurentA val = laurent_from_fraction(M[c][k]);
      if (val.is_zero()) continue;
      DeltaPolynomial g = laurent_to_delta(val);
      assert(g.degree() <= g_degree_bound(pi, sigma, mus[c]));
      sol[mus[c]] = val;
      out[mus[c]] = g;
    }
  }
  return out;
}

}  // namespace

const StructureConstantTable& structure_constants(const Partition& pi, const Partition& sigma) {
  // the product is symmetric, so cache on the sorted pair
  std::pair<Partition, Partition> key = std::minmax(pi, sigma);
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, std::unique_ptr<StructureConstantTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto t = std::make_unique<StructureConstantTable>(solve_structure_constants(pi, sigma));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::move(key), std::move(t));
  return *it->second;
}

BetaPolynomial c_from_g(const Partition& pi, const Partition& sigma, const Partition& mu) {
  int n = mu.size();
  assert(pi.size() == n && sigma.size() == n);
  Partition pit = strip_units(pi), sgt = strip_units(sigma), mut = strip_units(mu);
  const StructureConstantTable& g = structure_constants(pit, sgt);
  DeltaPolynomial s;
  Rat fact(1);
  for (int i = 0; i + mut.size() <= pit.size() + sgt.size(); i++) {
    if (i > 1) fact *= i;
    auto it = g.find(add_units(mut, i));
    if (it != g.end()) s += it->second * (fact * binom(n - mut.size(), i));
  }
  Rat zr = Rat((long)z(mut)) / (Rat((long)z(pit)) * Rat((long)z(sgt)));
  LaurentA v = delta_to_laurent(s) * LaurentA::monomial(degree_d(pi, sigma, mu), zr);
  // c lives in Q[alpha] with alpha = A^2: every exponent even and nonnegative.
  std::vector<Rat> in_alpha;
  for (const auto& [e, a] : v.c) {
    if (e < 0 || e % 2 != 0) throw std::runtime_error("not a polynomial in beta");
    if ((int)in_alpha.size() <= e / 2) in_alpha.resize(e / 2 + 1, Rat(0));
    in_alpha[e / 2] = a;
  }
  return Poly(std::move(in_alpha)).shift_arg(1);
}

}  // namespace jacklab
