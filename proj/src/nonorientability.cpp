#include "jacklab/nonorientability.hpp"

#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace jacklab {

namespace {

int orbit_count(int nflags, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<char> seen(nflags, 0);
  int k = 0;
  std::vector<int> stack;
  for (int f = 0; f < nflags; f++) {
    if (seen[f]) continue;
    k++;
    seen[f] = 1;
    stack.assign(1, f);
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (int h : {a[g], b[g]})
        if (!seen[h]) {
          seen[h] = 1;
          stack.push_back(h);
        }
    }
  }
  return k;
}

bool connected(const FlagMap& m) {
  if (m.flags() == 0) return true;
  std::vector<char> seen(m.flags(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int vis = 1;
  while (!stack.empty()) {
    int g = stack.back();
    stack.pop_back();
    for (int h : {m.s0[g], m.s1[g], m.s2[g]})
      if (!seen[h]) {
        seen[h] = 1;
        vis++;
        stack.push_back(h);
      }
  }
  return vis == m.flags();
}

// Root-edge removal with the corner repairs applied; new roots still live in
// old flag ids (-1 when the endpoint had degree 1 and dissolved).
struct Deletion {
  FlagMap rest;
  std::vector<int> nid;  // old flag -> new flag, -1 on the removed edge
  int near_root, far_root;
};

Deletion delete_edge(const RootedMap& rm) {
  const FlagMap& m = rm.map;
  assert(0 <= rm.root && rm.root < m.flags());
  int r = rm.root, e1 = m.s0[r], e2 = m.s2[r], e3 = m.s0[e2];
  bool near_leaf = m.s1[r] == e2;  // root vertex has only this edge
  bool far_leaf = m.s1[e1] == e3;

  std::vector<int> s1 = m.s1;
  if (!near_leaf) {
    int p = s1[r], q = s1[e2];
    s1[p] = q;
    s1[q] = p;
  }
  if (!far_leaf) {
    int p = s1[e1], q = s1[e3];
    s1[p] = q;
    s1[q] = p;
  }

  Deletion d;
  d.nid.assign(m.flags(), -1);
  int k = 0;
  for (int f = 0; f < m.flags(); f++)
    if (f != r && f != e1 && f != e2 && f != e3) d.nid[f] = k++;
  d.rest.s0.resize(k);
  d.rest.s1.resize(k);
  d.rest.s2.resize(k);
  d.rest.end.resize(k);
  for (int f = 0; f < m.flags(); f++) {
    if (d.nid[f] < 0) continue;
    d.rest.s0[d.nid[f]] = d.nid[m.s0[f]];
    d.rest.s1[d.nid[f]] = d.nid[s1[f]];
    d.rest.s2[d.nid[f]] = d.nid[m.s2[f]];
    d.rest.end[d.nid[f]] = m.end[f];
  }
  d.near_root = near_leaf ? -1 : m.s1[e2];  // next corner around the root vertex
  d.far_root = far_leaf ? -1 : m.s1[e1];    // next corner along the root face
  return d;
}

}  // namespace

EdgeClass classify_root_edge(const RootedMap& m) {
  if (m.empty()) throw std::runtime_error("no root edge");
  assert(connected(m.map));
  Deletion d = delete_edge(m);
  if (d.near_root < 0 || d.far_root < 0 || !connected(d.rest)) return EdgeClass::Bridge;
  int before = orbit_count(m.map.flags(), m.map.s0, m.map.s1);
  int after = orbit_count(d.rest.flags(), d.rest.s0, d.rest.s1);
  if (after == before - 1) return EdgeClass::Border;
  if (after == before) return EdgeClass::Twisted;
  assert(after == before + 1);
  return EdgeClass::Handle;
}

std::vector<RootedMap> delete_root_edge(const RootedMap& m) {
  if (m.empty()) throw std::runtime_error("no root edge");
  Deletion d = delete_edge(m);
  if (d.near_root >= 0 && d.far_root >= 0 && connected(d.rest))
    return {RootedMap{std::move(d.rest), d.nid[d.near_root]}};

  std::vector<RootedMap> out(2);
  std::vector<int> ids;
  if (d.near_root >= 0) {
    out[0] = extract_component(d.rest, d.nid[d.near_root], &ids);
    out[0].root = ids[d.nid[d.near_root]];
  }
  if (d.far_root >= 0) {
    out[1] = extract_component(d.rest, d.nid[d.far_root], &ids);
    out[1].root = ids[d.nid[d.far_root]];
  }
  assert(out[0].map.flags() + out[1].map.flags() == d.rest.flags());
  return out;
}

RootedMap twist_root_edge(const RootedMap& m) {
  if (m.empty()) throw std::runtime_error("no root edge");
  RootedMap t = m;
  int r = t.root, w1 = t.map.s0[r], w2 = t.map.s2[w1];
  int p = t.map.s1[w1], q = t.map.s1[w2];
  assert(p != w2);  // far endpoint degree >= 2
  assert(t.map.s1[t.root] != t.map.s2[t.root]);
  t.map.s1[w1] = q;
  t.map.s1[q] = w1;
  t.map.s1[w2] = p;
  t.map.s1[p] = w2;
  return t;
}

long eta_component(const RootedMap& m, EtaPolicy policy, std::vector<EdgeClass>* trace) {
  if (m.empty()) return 0;
  EdgeClass cls = classify_root_edge(m);
  if (trace) trace->push_back(cls);
  std::vector<RootedMap> parts = delete_root_edge(m);
  switch (cls) {
    case EdgeClass::Bridge:
      assert(parts.size() == 2);
      return eta_component(parts[0], policy, trace) + eta_component(parts[1], policy, trace);
    case EdgeClass::Border:
      return eta_component(parts[0], policy, trace);
    case EdgeClass::Twisted:
      return eta_component(parts[0], policy, trace) + 1;
    case EdgeClass::Handle: {
      long base = eta_component(parts[0], policy, trace);
      RootedMap t = twist_root_edge(m);
      bool om = is_orientable(m.map), ot = is_orientable(t.map);
      assert(!(om && ot));  // at most one regluing of a handle is orientable
      if (om) return base;
      if (ot) return base + 1;
      std::vector<int> sm = canonical_serialization(m), st = canonical_serialization(t);
      assert(sm != st);
      bool keep = policy == EtaPolicy::OrientableThenLexSmall ? sm < st : sm > st;
      return keep ? base : base + 1;
    }
  }
  assert(false);
  return 0;
}

long eta(const MapList& l, EtaPolicy policy, std::vector<EdgeClass>* trace) {
  long s = 0;
  for (const RootedMap& m : l) s += eta_component(m, policy, trace);
  return s;
}

bool is_unhandled_component(const RootedMap& m) {
  if (m.empty()) return true;
  if (classify_root_edge(m) == EdgeClass::Handle) return false;
  for (const RootedMap& p : delete_root_edge(m))
    if (!is_unhandled_component(p)) return false;
  return true;
}

bool is_unhandled(const MapList& l) {
  for (const RootedMap& m : l)
    if (!is_unhandled_component(m)) return false;
  return true;
}

namespace {

// The rooted list identified with delta in G^{la;la}: component i = face i,
// rooted at face i's root.
MapList face_rooted_list(const Partition& la, const Matching& delta) {
  if (delta.n != la.size()) throw std::runtime_error("delta not in a G^{la;la} class");
  if (component_type(delta, eps_matching(delta.n), delta_matching(la)) != la)
    throw std::runtime_error("delta not in a G^{la;la} class");
  FlagMap m = glue(la, delta);
  MapList out;
  int total = 0;
  for (int fr : m.face_roots) {
    std::vector<int> ids;
    RootedMap c = extract_component(m, fr, &ids);
    c.root = ids[fr];
    total += c.map.flags();
    out.push_back(std::move(c));
  }
  assert(total == m.flags());  // one face per component
  return out;
}

}  // namespace

long stat_eta(const Partition& la, const Matching& delta, EtaPolicy policy,
              std::vector<EdgeClass>* trace) {
  return eta(face_rooted_list(la, delta), policy, trace);
}

bool is_unhandled_matching(const Partition& la, const Matching& delta) {
  return is_unhandled(face_rooted_list(la, delta));
}

BetaPolynomial poly_G_eta(const Partition& pi, const Partition& sg, const Partition& la,
                          EtaPolicy policy) {
  std::vector<Rat> c;
  for (const Matching& d : class_G(pi, sg, la, la)) {
    long e = stat_eta(la, d, policy);
    if ((long)c.size() <= e) c.resize(e + 1, Rat(0));
    c[e] += 1;
  }
  return Poly(std::move(c));
}

BetaPolynomial poly_H_eta(const Partition& pi, const Partition& sg, const Partition& la,
                          const Partition& mu, EtaPolicy policy) {
  std::map<long, long long> census;
  for (const Matching& d : class_G(pi, sg, la, mu)) {
    FlagMap m = glue(la, d);
    for (const MapList& l : component_labellings(m, mu)) census[eta(l, policy)]++;
  }
  long long fiber = z(la) * (1LL << la.length());
  std::vector<Rat> c;
  for (const auto& [e, k] : census) {
    if (k % fiber) throw std::runtime_error("list census not divisible");
    if ((long)c.size() <= e) c.resize(e + 1, Rat(0));
    c[e] = Rat((long)(k / fiber));
  }
  return Poly(std::move(c));
}

}  // namespace jacklab
