#include "jacklab/coeffs.hpp"

#include <cassert>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "jacklab/jack.hpp"

namespace jacklab {

namespace {

// Gauss-Jordan inverse over the rational function field.
std::vector<std::vector<RationalFunction>> invert(std::vector<std::vector<RationalFunction>> a) {
  size_t k = a.size();
  std::vector<std::vector<RationalFunction>> inv(k, std::vector<RationalFunction>(k));
  for (size_t i = 0; i < k; ++i) inv[i][i] = RationalFunction(1);
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && a[piv][col].is_zero()) ++piv;
    if (piv == k) throw std::runtime_error("theta basis degenerate");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    RationalFunction f = RationalFunction(1) / a[col][col];
    for (size_t j = 0; j < k; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      RationalFunction m = a[r][col];
      for (size_t j = 0; j < k; ++j) {
        a[r][j] -= m * a[col][j];
        inv[r][j] -= m * inv[col][j];
      }
    }
  }
  return inv;
}

// alpha^{l(la)} z_la
RationalFunction slot_weight(const Partition& la) {
  return RationalFunction(Poly::monomial(la.length(), Rat((long)z(la))));
}

std::unique_ptr<TripleTable> build_connection(int n) {
  const JackTable& t = jack_table(n);
  size_t k = t.parts.size();
  std::vector<std::vector<RationalFunction>> m(k, std::vector<RationalFunction>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) m[i][j] = t.jack_p[i][j];
  std::vector<std::vector<RationalFunction>> minv = invert(std::move(m));

  // theta_mu(th) / <J_th, J_th>, reused across all pairs by the oracle
  std::vector<std::vector<RationalFunction>> weighted(k, std::vector<RationalFunction>(k));
  for (size_t th = 0; th < k; ++th)
    for (size_t mu = 0; mu < k; ++mu) weighted[th][mu] = t.jack_p[th][mu] / t.norm[th];

  auto tab = std::make_unique<TripleTable>();
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a; b < k; ++b) {
      std::vector<RationalFunction> prod(k);
      for (size_t la = 0; la < k; ++la) prod[la] = t.jack_p[la][a] * t.jack_p[la][b];
      for (size_t mu = 0; mu < k; ++mu) {
        RationalFunction solved;
        for (size_t la = 0; la < k; ++la)
          if (!minv[mu][la].is_zero() && !prod[la].is_zero()) solved += minv[mu][la] * prod[la];
        RationalFunction oracle;
        for (size_t th = 0; th < k; ++th)
          if (!prod[th].is_zero() && !weighted[th][mu].is_zero())
            oracle += prod[th] * weighted[th][mu];
        oracle *= slot_weight(t.parts[mu]);
        if (!(solved == oracle)) throw std::runtime_error("connection oracle disagreement");
        BetaPolynomial cb = alpha_to_beta(solved);
        (*tab)[{t.parts[a], t.parts[b], t.parts[mu]}] = cb;
        (*tab)[{t.parts[b], t.parts[a], t.parts[mu]}] = std::move(cb);
      }
    }
  return tab;
}

// Distinct sub-multisets of la's parts with the given sum, paired with the
// complementary rest.
void submultisets(const std::vector<int>& parts, size_t i, int target, std::vector<int>& chosen,
                  std::vector<int>& rest,
                  const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  if (target == 0) {
    std::vector<int> tail(parts.begin() + i, parts.end());
    std::vector<int> full = rest;
    full.insert(full.end(), tail.begin(), tail.end());
    fn(chosen, full);
    return;
  }
  if (i == parts.size()) return;
  size_t j = i;
  while (j < parts.size() && parts[j] == parts[i]) ++j;
  int avail = (int)(j - i);
  for (int take = 0; take <= avail && take * parts[i] <= target; ++take) {
    size_t nc = chosen.size(), nr = rest.size();
    chosen.insert(chosen.end(), take, parts[i]);
    rest.insert(rest.end(), avail - take, parts[i]);
    submultisets(parts, j, target - take * parts[i], chosen, rest, fn);
    chosen.resize(nc);
    rest.resize(nr);
  }
}

}  // namespace

const TripleTable& connection_c(int n) {
  assert(n >= 1);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TripleTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto t = build_connection(n);  // outside the lock; duplicates are identical
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(t));
  return *it->second;
}

std::map<int, std::map<TripleKey, RationalFunction>> connection_h(int n_max) {
  assert(n_max >= 1);
  using Layer = std::map<TripleKey, RationalFunction>;
  std::map<int, Layer> s;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& [key, c] : connection_c(n)) {
      if (c.is_zero()) continue;
      s[n][key] = RationalFunction(beta_to_alpha(c)) / slot_weight(std::get<2>(key));
    }

  // log(1 + S) truncated at t-degree n_max; S^k lives in degrees >= k
  std::map<int, Layer> log_s = s, power = s;
  for (int k = 2; k <= n_max; ++k) {
    std::map<int, Layer> next;
    for (const auto& [da, la] : power) {
      if (da + 1 > n_max) continue;
      for (const auto& [db, lb] : s) {
        if (da + db > n_max) break;
        for (const auto& [ka, va] : la)
          for (const auto& [kb, vb] : lb) {
            TripleKey key{concat(std::get<0>(ka), std::get<0>(kb)),
                          concat(std::get<1>(ka), std::get<1>(kb)),
                          concat(std::get<2>(ka), std::get<2>(kb))};
            next[da + db][key] += va * vb;
          }
      }
    }
    power = std::move(next);
    Rat coef = Rat(k % 2 ? 1 : -1) / Rat((long)k);
    for (const auto& [d, layer] : power)
      for (const auto& [key, v] : layer) log_s[d][key] += v * RationalFunction(coef);
  }

  // alpha t d/dt multiplies the degree-n layer by alpha n
  std::map<int, Layer> h;
  for (int n = 1; n <= n_max; ++n) {
    RationalFunction scale(Poly::monomial(1, Rat((long)n)));
    for (const auto& [key, v] : log_s[n]) h[n][key] = v * scale;
  }
  return h;
}

bool check_top_factorisation(const Partition& pi, const Partition& sg, const Partition& la) {
  int n = la.size();
  if (pi.size() != n || sg.size() != n || n < 1) throw std::runtime_error("size mismatch");
  int d = degree_d(pi, sg, la);
  Rat lhs = beta_to_alpha(connection_c(n).at({pi, sg, la})).coeff(d);

  auto h = connection_h(la.parts[0]);
  // pieces are indexed by la's own decreasing order; distinct ordered
  // sequences of sub-multisets count once each, swaps across equal la parts
  // included
  Rat rhs(0);
  std::function<void(size_t, const std::vector<int>&, const std::vector<int>&, const Rat&)> rec =
      [&](size_t i, const std::vector<int>& pi_rest, const std::vector<int>& sg_rest,
          const Rat& acc) {
        if (i == la.parts.size()) {
          rhs += acc;
          return;
        }
        int part = la.parts[i];
        std::vector<int> chosen, rest;
        submultisets(pi_rest, 0, part, chosen, rest,
                     [&](const std::vector<int>& pi_i, const std::vector<int>& pi_next) {
                       std::vector<int> chosen2, rest2;
                       submultisets(
                           sg_rest, 0, part, chosen2, rest2,
                           [&](const std::vector<int>& sg_i, const std::vector<int>& sg_next) {
                             Partition ppi(pi_i), psg(sg_i);
                             int e = part + 1 - ppi.length() - psg.length();
                             auto it = h[part].find({ppi, psg, Partition{part}});
                             if (it == h[part].end()) return;
                             assert(it->second.is_polynomial());
                             Rat f = it->second.as_polynomial().coeff(e);
                             if (f == 0) return;
                             rec(i + 1, pi_next, sg_next, acc * f);
                           });
                     });
      };
  rec(0, pi.parts, sg.parts, Rat(1));
  return lhs == rhs;
}

}  // namespace jacklab
