#include "jacklab/jack.hpp"

#include <cassert>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace jacklab {

namespace {

// p_r m_la = sum_mu m_{u+r}(mu) m_mu over the distinct raises u -> u+r of one
// slot of la (u a part of la, or u = 0 appending a new part).
std::map<Partition, Rat> multiply_powersum(const std::map<Partition, Rat>& f, int r) {
  std::map<Partition, Rat> out;
  for (const auto& [la, coef] : f) {
    std::vector<int> raised = la.parts;
    raised.push_back(0);
    int prev = -1;
    for (size_t i = 0; i < raised.size(); ++i) {
      if (raised[i] == prev) continue;  // equal slots give the same mu
      prev = raised[i];
      std::vector<int> v = la.parts;
      if (i < la.parts.size())
        v[i] += r;
      else
        v.push_back(r);
      Partition mu(std::move(v));
      out[mu] += coef * Rat((long)mu.mult(prev + r));
    }
  }
  return out;
}

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
  size_t k = a.size();
  std::vector<std::vector<Rat>> inv(k, std::vector<Rat>(k, Rat(0)));
  for (size_t i = 0; i < k; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && a[piv][col] == 0) ++piv;
    assert(piv < k);  // basis transition matrices are invertible
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat f = 1 / a[col][col];
    for (size_t j = 0; j < k; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat m = a[r][col];
      for (size_t j = 0; j < k; ++j) {
        a[r][j] -= m * a[col][j];
        inv[r][j] -= m * inv[col][j];
      }
    }
  }
  return inv;
}

RationalFunction pairing_weight(const Partition& la) {
  // alpha^{l(la)} z_la
  return RationalFunction(Poly::monomial(la.length(), Rat((long)z(la))));
}

RationalFunction dot(const JackTable& t, const std::vector<RationalFunction>& v,
                     const std::vector<RationalFunction>& w) {
  RationalFunction s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero() || w[i].is_zero()) continue;
    s += v[i] * w[i] * pairing_weight(t.parts[i]);
  }
  return s;
}

Rat factorial_rat(int n) {
  Rat f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Doubled Laplace-Beltrami eigenvalue in n variables,
// alpha sum_i mu_i (mu_i - 1) + 2 sum_i (n - i) mu_i.
Poly eigenvalue(const Partition& mu, int n) {
  long long ca = 0, c0 = 0;
  for (size_t i = 0; i < mu.parts.size(); ++i) {
    ca += (long long)mu.parts[i] * (mu.parts[i] - 1);
    c0 += 2LL * (n - 1 - (long long)i) * mu.parts[i];
  }
  return Poly({Rat((long)c0), Rat((long)ca)});
}

// [m_la] J_la = prod_{s in la} (alpha a(s) + l(s) + 1).
Poly hook_product(const Partition& la) {
  Poly h = Poly::constant(1);
  for (size_t i = 0; i < la.parts.size(); ++i)
    for (int j = 1; j <= la.parts[i]; ++j) {
      int arm = la.parts[i] - j;
      int leg = 0;
      for (size_t r = i + 1; r < la.parts.size(); ++r)
        if (la.parts[r] >= j) ++leg;
      h *= Poly({Rat(leg + 1), Rat(arm)});
    }
  return h;
}

std::unique_ptr<JackTable> build_table(int n) {
  auto t = std::make_unique<JackTable>();
  t->n = n;
  t->parts = all_partitions(n);
  size_t k = t->parts.size();
  for (size_t i = 0; i < k; ++i) t->index[t->parts[i]] = (int)i;

  t->p_to_m.assign(k, std::vector<Rat>(k, Rat(0)));
  for (size_t i = 0; i < k; ++i) {
    std::map<Partition, Rat> row{{Partition{}, Rat(1)}};
    for (int r : t->parts[i].parts) row = multiply_powersum(row, r);
    for (const auto& [mu, coef] : row) t->p_to_m[i][t->idx(mu)] = coef;
  }
  t->m_to_p = n == 0 ? t->p_to_m : invert(t->p_to_m);

  // J_la in the monomial basis by the Laplace-Beltrami recurrence: downward
  // along dominance from the hook-product top coefficient, the m_mu
  // coefficient is sum over sources nu = sort(mu with mu_p -> a, mu_q -> b),
  // a + b = mu_p + mu_q, a > max(mu_p, mu_q), of 2(a - b) [m_nu] J_la,
  // divided exactly by eigenvalue(la) - eigenvalue(mu).
  t->jack_p.assign(k, {});
  t->norm.assign(k, RationalFunction());
  int unit_idx = n == 0 ? 0 : t->idx(Partition(std::vector<int>(n, 1)));
  std::vector<Poly> eig(k);
  for (size_t i = 0; i < k; ++i) eig[i] = eigenvalue(t->parts[i], n);
  for (size_t i = 0; i < k; ++i) {
    std::vector<Poly> v(k);
    std::vector<char> known(k, 0);
    v[i] = hook_product(t->parts[i]);
    known[i] = 1;
    for (size_t j = i + 1; j < k; ++j) {
      if (!dominance_leq(t->parts[j], t->parts[i])) continue;
      const std::vector<int>& mu = t->parts[j].parts;
      Poly acc;
      for (size_t p = 0; p + 1 < mu.size(); ++p)
        for (size_t q = p + 1; q < mu.size(); ++q) {
          int s = mu[p] + mu[q];
          for (int a = mu[p] + 1; a <= s; ++a) {
            std::vector<int> w = mu;
            w[p] = a;
            w[q] = s - a;
            if (w[q] == 0) w.erase(w.begin() + q);
            auto it = t->index.find(Partition(std::move(w)));
            if (it == t->index.end() || !known[it->second]) continue;
            acc += v[it->second] * Rat(2L * (2 * a - s));
          }
        }
      Poly quot, rem;
      Poly::divmod(acc, eig[i] - eig[j], quot, rem);
      assert(rem.is_zero());
      v[j] = std::move(quot);
      known[j] = 1;
    }
    assert(bool(v[unit_idx].coeff(0) == factorial_rat(n)) && v[unit_idx].degree() <= 0);
    std::vector<RationalFunction> row(k);
    for (size_t col = 0; col < k; ++col) {
      Poly s;
      for (size_t j = 0; j < k; ++j)
        if (!v[j].is_zero() && t->m_to_p[j][col] != 0) s += v[j] * t->m_to_p[j][col];
      row[col] = RationalFunction(std::move(s));
    }
    t->norm[i] = dot(*t, row, row);
    assert(!t->norm[i].is_zero());
    t->jack_p[i] = std::move(row);
  }
  return t;
}

}  // namespace

const JackTable& jack_table(int n) {
  assert(n >= 0);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<JackTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto t = build_table(n);  // outside the lock; duplicates are identical
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(t));
  return *it->second;
}

SymFunc monomial_in_powersum(const Partition& mu) {
  const JackTable& t = jack_table(mu.size());
  SymFunc f;
  f.basis = SymFunc::Basis::P;
  f.n = mu.size();
  int i = t.idx(mu);
  for (size_t j = 0; j < t.parts.size(); ++j)
    if (t.m_to_p[i][j] != 0) f.coeff[t.parts[j]] = RationalFunction(t.m_to_p[i][j]);
  return f;
}

RationalFunction inner_product(const SymFunc& f, const SymFunc& g) {
  if (f.basis != SymFunc::Basis::P || g.basis != SymFunc::Basis::P || f.n != g.n)
    throw std::runtime_error("inner product needs power-sum operands of equal degree");
  RationalFunction s;
  for (const auto& [la, a] : f.coeff) {
    auto it = g.coeff.find(la);
    if (it != g.coeff.end()) s += a * it->second * pairing_weight(la);
  }
  return s;
}

SymFunc jack(const Partition& la) {
  const JackTable& t = jack_table(la.size());
  SymFunc f;
  f.basis = SymFunc::Basis::P;
  f.n = la.size();
  int i = t.idx(la);
  for (size_t j = 0; j < t.parts.size(); ++j)
    if (!t.jack_p[i][j].is_zero()) f.coeff[t.parts[j]] = t.jack_p[i][j];
  return f;
}

RationalFunction theta(const Partition& mu, const Partition& la) {
  if (mu.size() != la.size()) throw std::runtime_error("size mismatch");
  const JackTable& t = jack_table(la.size());
  return t.jack_p[t.idx(la)][t.idx(mu)];
}

RationalFunction jack_norm(const Partition& la) {
  const JackTable& t = jack_table(la.size());
  return t.norm[t.idx(la)];
}

}  // namespace jacklab
