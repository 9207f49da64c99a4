#include "jacklab/maps.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace jacklab {

namespace {

std::vector<std::vector<int>> orbits(int nflags,
                                     std::vector<const std::vector<int>*> perms) {
  std::vector<char> seen(nflags, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < nflags; s++) {
    if (seen[s]) continue;
    std::vector<int> orb = {s};
    seen[s] = 1;
    for (size_t q = 0; q < orb.size(); q++)
      for (const std::vector<int>* p : perms) {
        int y = (*p)[orb[q]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace

void validate_flagmap(const FlagMap& m) {
  int N = m.flags();
  assert((int)m.s1.size() == N && (int)m.s2.size() == N && (int)m.end.size() == N);
  for (int f = 0; f < N; f++) {
    assert(m.s0[m.s0[f]] == f && m.s0[f] != f);
    assert(m.s1[m.s1[f]] == f && m.s1[f] != f);
    assert(m.s2[m.s2[f]] == f && m.s2[f] != f);
    assert(m.s0[m.s2[f]] == m.s2[m.s0[f]]);
    assert(m.s0[m.s2[f]] != f);
    assert(m.end[m.s0[f]] != m.end[f]);
    assert(m.end[m.s1[f]] == m.end[f]);
    assert(m.end[m.s2[f]] == m.end[f]);
  }
  for (int fr : m.face_roots) assert(0 <= fr && fr < N);
}

FlagMap glue(const Partition& la, const Matching& delta) {
  assert(la.size() == delta.n);
  int n = la.size();
  FlagMap m;
  m.s0.resize(4 * n);
  m.s1.resize(4 * n);
  m.s2.resize(4 * n);
  m.end.resize(4 * n);
  for (int x = 0; x < 2 * n; x++)
    for (int e = 0; e < 2; e++) {
      m.s0[2 * x + e] = 2 * x + (1 - e);
      m.s2[2 * x + e] = 2 * delta.pair_[x] + e;
      m.end[2 * x + e] = (char)e;
    }
  // Black corners pair the ends (i, i^) of each label; white corners pair
  // (i, next^) cyclically inside each polygon block.
  for (int i = 0; i < n; i++) {
    int a = 2 * (2 * i), b = 2 * (2 * i + 1);
    m.s1[a] = b;
    m.s1[b] = a;
  }
  int base = 0;
  for (int s = 0; s < la.length(); s++) {
    int len = la.parts[s];
    m.face_roots.push_back(4 * base);
    for (int t = 0; t < len; t++) {
      int a = 2 * (2 * (base + t)) + 1;
      int b = 2 * (2 * (base + (t + 1) % len) + 1) + 1;
      m.s1[a] = b;
      m.s1[b] = a;
    }
    base += len;
  }
  return m;
}

Profiles profiles(const FlagMap& m) {
  for (int f = 0; f < m.flags(); f++)
    if (m.end[m.s0[f]] == m.end[f] || m.end[m.s1[f]] != m.end[f] ||
        m.end[m.s2[f]] != m.end[f])
      throw std::runtime_error("map not bipartite");
  Profiles p;
  std::vector<int> acc;
  for (const auto& orb : orbits(m.flags(), {&m.s0, &m.s1})) {
    assert(orb.size() % 4 == 0);
    acc.push_back((int)orb.size() / 4);
  }
  p.faces = Partition(std::move(acc));
  std::vector<int> w, b;
  for (const auto& orb : orbits(m.flags(), {&m.s1, &m.s2}))
    (m.end[orb[0]] ? w : b).push_back((int)orb.size() / 2);
  p.whites = Partition(std::move(w));
  p.blacks = Partition(std::move(b));
  acc.clear();
  for (const auto& orb : orbits(m.flags(), {&m.s0, &m.s1, &m.s2}))
    acc.push_back((int)orb.size() / 4);
  p.components = Partition(std::move(acc));
  return p;
}

bool is_orientable(const FlagMap& m) {
  std::vector<int> color(m.flags(), -1);
  for (int s = 0; s < m.flags(); s++) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int y : {m.s0[f], m.s1[f], m.s2[f]}) {
        if (color[y] < 0) {
          color[y] = 1 - color[f];
          stack.push_back(y);
        } else if (color[y] == color[f]) {
          return false;
        }
      }
    }
  }
  return true;
}

int euler_characteristic(const FlagMap& m) {
  int V = (int)orbits(m.flags(), {&m.s1, &m.s2}).size();
  int F = (int)orbits(m.flags(), {&m.s0, &m.s1}).size();
  return V - m.edges() + F;
}

RootedMap extract_component(const FlagMap& m, int flag, std::vector<int>* new_ids) {
  assert(0 <= flag && flag < m.flags());
  std::vector<int> ids(m.flags(), -1);
  std::vector<int> orb = {flag};
  ids[flag] = 0;
  for (size_t q = 0; q < orb.size(); q++)
    for (int y : {m.s0[orb[q]], m.s1[orb[q]], m.s2[orb[q]]})
      if (ids[y] < 0) {
        ids[y] = 1;
        orb.push_back(y);
      }
  std::sort(orb.begin(), orb.end());
  for (int i = 0; i < (int)orb.size(); i++) ids[orb[i]] = i;
  RootedMap r;
  r.map.s0.resize(orb.size());
  r.map.s1.resize(orb.size());
  r.map.s2.resize(orb.size());
  r.map.end.resize(orb.size());
  for (int f : orb) {
    r.map.s0[ids[f]] = ids[m.s0[f]];
    r.map.s1[ids[f]] = ids[m.s1[f]];
    r.map.s2[ids[f]] = ids[m.s2[f]];
    r.map.end[ids[f]] = m.end[f];
  }
  for (int fr : m.face_roots)
    if (ids[fr] >= 0) r.map.face_roots.push_back(ids[fr]);
  if (new_ids) *new_ids = std::move(ids);
  return r;
}

std::vector<RootedMap> split_components(const FlagMap& m) {
  std::vector<RootedMap> out;
  std::vector<char> seen(m.flags(), 0);
  for (int f = 0; f < m.flags(); f++) {
    if (seen[f]) continue;
    std::vector<int> ids;
    out.push_back(extract_component(m, f, &ids));
    for (int g = 0; g < m.flags(); g++)
      if (ids[g] >= 0) seen[g] = 1;
  }
  return out;
}

long long count_rooted_lists(const Partition& pi, const Partition& sg,
                             const Partition& la, const Partition& mu) {
  long long G = (long long)class_G(pi, sg, la, mu).size();
  long long num = G * z(mu) * (1LL << mu.length());
  long long den = z(la) * (1LL << la.length());
  if (num % den) throw std::runtime_error("counting identity violated");
  return num / den;
}

long long count_oriented_lists_anyface(const Partition& pi, const Partition& sg,
                                       const Partition& mu) {
  assert(pi.size() == mu.size() && sg.size() == mu.size());
  long long total = 0;
  for (const Partition& nu : all_partitions(mu.size())) {
    long long G = (long long)class_G(sg, pi, nu, mu, true).size();
    if (G == 0) continue;
    long long num = G * z(mu);
    if (num % z(nu)) throw std::runtime_error("counting identity violated");
    total += num / z(nu);
  }
  return total;
}

std::vector<MapList> component_labellings(const FlagMap& m, const Partition& mu) {
  std::vector<RootedMap> comps = split_components(m);
  std::vector<int> half(comps.size());
  for (size_t i = 0; i < comps.size(); i++) half[i] = comps[i].map.edges();
  {
    std::vector<int> sizes = half;
    if (Partition(std::move(sizes)) != mu)
      throw std::runtime_error("component profile != mu");
  }
  // All injective position -> component assignments with matching edge counts,
  // then all root choices (black-end flags, ascending) per position.
  std::vector<std::vector<int>> roots(comps.size());
  for (size_t i = 0; i < comps.size(); i++)
    for (int f = 0; f < comps[i].map.flags(); f++)
      if (comps[i].map.end[f] == 0) roots[i].push_back(f);
  std::vector<MapList> out;
  int L = mu.length();
  std::vector<int> pick(L, -1);
  std::vector<char> used(comps.size(), 0);
  auto emit = [&]() {
    std::vector<int> idx(L, 0);
    for (;;) {
      MapList list;
      for (int p = 0; p < L; p++) {
        RootedMap r = comps[pick[p]];
        r.root = roots[pick[p]][idx[p]];
        list.push_back(std::move(r));
      }
      out.push_back(std::move(list));
      int p = 0;
      while (p < L && ++idx[p] == (int)roots[pick[p]].size()) idx[p++] = 0;
      if (p == L) break;
    }
  };
  std::function<void(int)> assign = [&](int p) {
    if (p == L) {
      emit();
      return;
    }
    for (size_t c = 0; c < comps.size(); c++) {
      if (used[c] || half[c] != mu.parts[p]) continue;
      used[c] = 1;
      pick[p] = (int)c;
      assign(p + 1);
      used[c] = 0;
    }
  };
  assign(0);
  return out;
}

std::vector<int> canonical_serialization(const RootedMap& r) {
  if (r.empty()) return {};
  const FlagMap& m = r.map;
  std::vector<int> ids(m.flags(), -1);
  std::vector<int> order = {r.root};
  ids[r.root] = 0;
  for (size_t q = 0; q < order.size(); q++)
    for (int y : {m.s0[order[q]], m.s1[order[q]], m.s2[order[q]]})
      if (ids[y] < 0) {
        ids[y] = (int)order.size();
        order.push_back(y);
      }
  assert((int)order.size() == m.flags());
  std::vector<int> out;
  out.reserve(4 * m.flags());
  for (int f : order) {
    out.push_back(ids[m.s0[f]]);
    out.push_back(ids[m.s1[f]]);
    out.push_back(ids[m.s2[f]]);
    out.push_back(m.end[f]);
  }
  return out;
}

}  // namespace jacklab
