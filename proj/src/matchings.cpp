#include "jacklab/matchings.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace jacklab {

std::string Matching::str() const {
  auto label = [](int p) {
    std::string s = std::to_string(p / 2 + 1);
    if (p & 1) s += "^";
    return s;
  };
  // Plain label first within a mixed pair; pairs ordered by first element.
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < 2 * n; x++) {
    int a = x, b = pair_[x];
    if (b < a) continue;
    if ((a & 1) && !(b & 1)) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end(), [](auto a, auto b) {
    return std::make_pair(a.first / 2, a.first & 1) <
           std::make_pair(b.first / 2, b.first & 1);
  });
  std::string out = "{";
  for (size_t i = 0; i < pairs.size(); i++) {
    if (i) out += ",";
    out += "{" + label(pairs[i].first) + "," + label(pairs[i].second) + "}";
  }
  return out + "}";
}

Matching eps_matching(int n) {
  Matching m;
  m.n = n;
  m.pair_.resize(2 * n);
  for (int i = 0; i < n; i++) {
    m.pair_[2 * i] = 2 * i + 1;
    m.pair_[2 * i + 1] = 2 * i;
  }
  return m;
}

Matching delta_matching(const Partition& la) {
  Matching m;
  m.n = la.size();
  m.pair_.resize(2 * m.n);
  int base = 0;
  for (int s = 0; s < la.length(); s++) {
    int len = la.parts[s];
    for (int t = 0; t < len; t++) {
      int plain = 2 * (base + t);
      int hatted = 2 * (base + (t + 1) % len) + 1;
      m.pair_[plain] = hatted;
      m.pair_[hatted] = plain;
    }
    base += len;
  }
  return m;
}

// Completes a partial pairing (-1 = unpaired), smallest unpaired point first.
static void complete(Matching& m, const std::function<void(const Matching&)>& fn) {
  int x = 0, N = 2 * m.n;
  while (x < N && m.pair_[x] >= 0) x++;
  if (x == N) {
    fn(m);
    return;
  }
  for (int y = x + 1; y < N; y++) {
    if (m.pair_[y] >= 0) continue;
    m.pair_[x] = y;
    m.pair_[y] = x;
    complete(m, fn);
    m.pair_[x] = -1;
    m.pair_[y] = -1;
  }
}

void for_each_matching(int n, const std::function<void(const Matching&)>& fn) {
  Matching m;
  m.n = n;
  m.pair_.assign(2 * n, -1);
  complete(m, fn);
}

std::vector<Matching> enumerate_matchings(int n) {
  std::vector<Matching> out;
  for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
  return out;
}

Partition cycle_type(const Matching& a, const Matching& b) {
  assert(a.n == b.n);
  int N = 2 * a.n;
  std::vector<char> seen(N, 0);
  std::vector<int> halves;
  for (int s = 0; s < N; s++) {
    if (seen[s]) continue;
    int len = 0, x = s;
    bool via_a = true;
    while (!seen[x]) {
      seen[x] = 1;
      len++;
      x = via_a ? a.pair_[x] : b.pair_[x];
      via_a = !via_a;
    }
    halves.push_back(len / 2);
  }
  return Partition(std::move(halves));
}

Partition component_type(const Matching& a, const Matching& b, const Matching& c) {
  assert(a.n == b.n && a.n == c.n);
  int N = 2 * a.n;
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < N; x++) {
    parent[find(x)] = find(a.pair_[x]);
    parent[find(x)] = find(b.pair_[x]);
    parent[find(x)] = find(c.pair_[x]);
  }
  std::vector<int> size(N, 0);
  for (int x = 0; x < N; x++) size[find(x)]++;
  std::vector<int> halves;
  for (int x = 0; x < N; x++)
    if (size[x]) halves.push_back(size[x] / 2);
  return Partition(std::move(halves));
}

bool is_bipartite(const Matching& m) {
  for (int x = 0; x < 2 * m.n; x++)
    if (((x ^ m.pair_[x]) & 1) == 0) return false;
  return true;
}

std::vector<Matching> class_G(const Partition& pi, const Partition& sigma,
                              const Partition& la,
                              const std::optional<Partition>& mu,
                              bool bipartite_only) {
  assert(pi.size() == la.size() && sigma.size() == la.size());
  Matching eps = eps_matching(la.size());
  Matching dl = delta_matching(la);
  std::vector<Matching> out;
  for_each_matching(la.size(), [&](const Matching& d) {
    if (bipartite_only && !is_bipartite(d)) return;
    if (cycle_type(d, eps) != pi || cycle_type(d, dl) != sigma) return;
    if (mu && component_type(d, eps, dl) != *mu) return;
    out.push_back(d);
  });
  return out;
}

static void record(MatchingCensus& c, const Matching& d, const Matching& eps,
                   const Matching& dl) {
  c[{cycle_type(d, eps), cycle_type(d, dl), component_type(d, eps, dl),
     is_bipartite(d)}]++;
}

MatchingCensus matching_census_serial(const Partition& la) {
  MatchingCensus out;
  Matching eps = eps_matching(la.size());
  Matching dl = delta_matching(la);
  for_each_matching(la.size(), [&](const Matching& d) { record(out, d, eps, dl); });
  return out;
}

MatchingCensus matching_census(const Partition& la) {
  int n = la.size();
  if (n == 0) return matching_census_serial(la);
  Matching eps = eps_matching(n);
  Matching dl = delta_matching(la);
  int shards = 2 * n - 1;
  std::vector<MatchingCensus> part(shards);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < shards; s++) {
    Matching m;
    m.n = n;
    m.pair_.assign(2 * n, -1);
    m.pair_[0] = s + 1;
    m.pair_[s + 1] = 0;
    complete(m, [&](const Matching& d) { record(part[s], d, eps, dl); });
  }
  MatchingCensus out;
  for (const MatchingCensus& p : part)
    for (const auto& [k, v] : p) out[k] += v;
  return out;
}

}  // namespace jacklab
