#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>

#include "jacklab/nonorientability.hpp"

using namespace jacklab;

static const EtaPolicy kPolicies[] = {EtaPolicy::OrientableThenLexSmall,
                                      EtaPolicy::OrientableThenLexLarge};

static Matching cross2() {  // {{1,2},{1^,2^}}
  Matching m;
  m.n = 2;
  m.pair_ = {2, 3, 0, 1};
  return m;
}

static Matching torus3() {  // {{1,3^},{2,1^},{3,2^}}
  Matching m;
  m.n = 3;
  m.pair_ = {5, 2, 1, 4, 3, 0};
  return m;
}

static Poly dpoly(std::initializer_list<long> v) {
  std::vector<Rat> c;
  for (long x : v) c.push_back(Rat(x));
  return Poly(std::move(c));
}

static RootedMap face_rooted(const Partition& la, const Matching& d, int face) {
  FlagMap m = glue(la, d);
  std::vector<int> ids;
  RootedMap c = extract_component(m, m.face_roots[face], &ids);
  c.root = ids[m.face_roots[face]];
  return c;
}

TEST_CASE("root edge classification golden") {
  RootedMap leaf = face_rooted({1}, eps_matching(1), 0);
  CHECK(classify_root_edge(leaf) == EdgeClass::Bridge);
  std::vector<RootedMap> parts = delete_root_edge(leaf);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].empty());
  CHECK(parts[1].empty());

  RootedMap proj = face_rooted({2}, cross2(), 0);
  CHECK(classify_root_edge(proj) == EdgeClass::Twisted);

  // Two-edge path: the root edge is a leaf whose white endpoint dissolves.
  RootedMap tube = face_rooted({2}, delta_matching({2}), 0);
  CHECK(classify_root_edge(tube) == EdgeClass::Bridge);
  parts = delete_root_edge(tube);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].map.edges() == 1);
  CHECK(parts[0].root == 2);
  CHECK(parts[1].empty());

  // Parallel digons on a sphere: deleting either face root merges the faces.
  FlagMap pillow = glue({1, 1}, cross2());
  for (int fr : pillow.face_roots) {
    std::vector<int> ids;
    RootedMap r = extract_component(pillow, fr, &ids);
    r.root = ids[fr];
    CHECK(classify_root_edge(r) == EdgeClass::Border);
    for (EtaPolicy p : kPolicies) CHECK(eta_component(r, p) == 0);
  }
}

TEST_CASE("eta golden cascades") {
  for (EtaPolicy p : kPolicies) {
    std::vector<EdgeClass> trace;
    CHECK(eta_component(face_rooted({1}, eps_matching(1), 0), p, &trace) == 0);
    CHECK(trace == std::vector<EdgeClass>{EdgeClass::Bridge});

    trace.clear();
    CHECK(eta_component(face_rooted({2}, cross2(), 0), p, &trace) == 1);
    CHECK(trace == std::vector<EdgeClass>{EdgeClass::Twisted, EdgeClass::Bridge});

    trace.clear();
    CHECK(eta_component(face_rooted({2}, delta_matching({2}), 0), p, &trace) == 0);
    CHECK(trace == std::vector<EdgeClass>{EdgeClass::Bridge, EdgeClass::Bridge});

    CHECK(eta(MapList{}, p) == 0);
  }
}

TEST_CASE("torus map: handle, twist mandate, unhandled") {
  Matching d = torus3();
  CHECK(is_bipartite(d));
  CHECK(cycle_type(d, eps_matching(3)) == Partition{3});
  CHECK(cycle_type(d, delta_matching({3})) == Partition{3});

  RootedMap m = face_rooted({3}, d, 0);
  CHECK(euler_characteristic(m.map) == 0);
  CHECK(is_orientable(m.map));
  CHECK(classify_root_edge(m) == EdgeClass::Handle);
  CHECK(!is_unhandled_component(m));

  RootedMap t = twist_root_edge(m);
  CHECK(twist_root_edge(t) == m);
  CHECK(!is_orientable(t.map));
  CHECK(delete_root_edge(t) == delete_root_edge(m));
  for (EtaPolicy p : kPolicies) {
    CHECK(eta_component(m, p) == 0);  // the orientable regluing keeps eta(M\e)
    CHECK(eta_component(t, p) == 1);
  }
}

TEST_CASE("no handle exists below n = 3") {
  for (int n = 1; n <= 2; n++)
    for (const auto& la : all_partitions(n)) {
      Matching eps = eps_matching(n), dl = delta_matching(la);
      for_each_matching(n, [&](const Matching& d) {
        FlagMap m = glue(la, d);
        Partition mu = component_type(d, eps, dl);
        for (const MapList& l : component_labellings(m, mu)) CHECK(is_unhandled(l));
      });
    }
}

TEST_CASE("eta vanishes exactly on orientable lists") {
  for (int n = 1; n <= 5; n++) {
    std::vector<Matching> all = enumerate_matchings(n);
    for (const auto& la : all_partitions(n)) {
      Matching eps = eps_matching(n), dl = delta_matching(la);
      std::atomic<long long> bad{0};
#pragma omp parallel for schedule(dynamic)
      for (size_t i = 0; i < all.size(); i++) {
        FlagMap m = glue(la, all[i]);
        bool ori = is_orientable(m);
        Partition mu = component_type(all[i], eps, dl);
        for (const MapList& l : component_labellings(m, mu))
          for (EtaPolicy p : kPolicies)
            if ((eta(l, p) == 0) != ori) bad++;
      }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("twist contract on non-bridge root edges") {
  for (int n = 1; n <= 4; n++)
    for (const auto& la : all_partitions(n))
      for_each_matching(n, [&](const Matching& d) {
        FlagMap g = glue(la, d);
        for (const RootedMap& comp : split_components(g))
          for (int f = 0; f < comp.map.flags(); f++) {
            if (comp.map.end[f] != 0) continue;
            RootedMap m{comp.map, f};
            EdgeClass cls = classify_root_edge(m);
            if (cls == EdgeClass::Bridge) continue;
            RootedMap t = twist_root_edge(m);
            CHECK(twist_root_edge(t) == m);
            CHECK(delete_root_edge(t) == delete_root_edge(m));
            EdgeClass tcls = classify_root_edge(t);
            if (cls == EdgeClass::Handle) {
              CHECK(tcls == EdgeClass::Handle);
              CHECK(!(is_orientable(m.map) && is_orientable(t.map)));
            } else {
              CHECK(tcls == (cls == EdgeClass::Border ? EdgeClass::Twisted : EdgeClass::Border));
            }
          }
      });
}

TEST_CASE("stat eta golden and domain errors") {
  for (EtaPolicy p : kPolicies) {
    CHECK(stat_eta({2}, cross2(), p) == 1);
    CHECK(stat_eta({1, 1}, eps_matching(2), p) == 0);
    CHECK(stat_eta({2}, eps_matching(2), p) == 0);
    CHECK(stat_eta({3}, torus3(), p) == 0);
    CHECK_THROWS_WITH(stat_eta({1, 1}, cross2(), p), "delta not in a G^{la;la} class");
    CHECK_THROWS_WITH(stat_eta({2, 1}, cross2(), p), "delta not in a G^{la;la} class");
  }
  CHECK(!is_unhandled_matching({3}, torus3()));
}

TEST_CASE("eta polynomials over matching classes") {
  for (EtaPolicy p : kPolicies) {
    CHECK(poly_G_eta({1}, {1}, {1}, p) == dpoly({1}));
    CHECK(poly_G_eta({2}, {2}, {2}, p) == dpoly({0, 1}));
    CHECK(poly_G_eta({1, 1}, {2}, {2}, p) == dpoly({1}));
  }
}

TEST_CASE("class polynomial degree, extremes, unhandled double count") {
  for (int n = 1; n <= 5; n++) {
    std::vector<Partition> parts = all_partitions(n);
    for (const auto& pi : parts)
      for (const auto& sg : parts)
        for (const auto& la : parts) {
          int d = degree_d(pi, sg, la);
          std::vector<Matching> cls = class_G(pi, sg, la, la);
          long bip = 0, unh = 0;
          for (const Matching& m : cls) {
            bip += is_bipartite(m);
            unh += is_unhandled_matching(la, m);
          }
          for (EtaPolicy p : kPolicies) {
            Poly g = poly_G_eta(pi, sg, la, p);
            CHECK(g.is_zero() == cls.empty());
            if (g.is_zero()) continue;
            CHECK(d >= 0);
            CHECK(g.degree() <= d);
            CHECK(bool(g.coeff(0) == Rat(bip)));
            CHECK(bool(g.coeff(d) == Rat(unh)));
            CHECK(bool(g.eval(1) == Rat((long)cls.size())));
          }
          Rat refined = 0;
          for (const auto& nu : parts) {
            if (!subpartition_leq(nu, la)) continue;
            long b2 = 0;
            for (const Matching& m : class_G(pi, sg, nu, la, true)) b2 += 1;
            refined += Rat((long)z(la) * b2) / Rat((long)z(nu));
          }
          CHECK(bool(refined == Rat(unh)));
        }
  }
}

TEST_CASE("list polynomial degree and extremes") {
  for (int n = 1; n <= 4; n++) {
    std::vector<Partition> parts = all_partitions(n);
    for (const auto& pi : parts)
      for (const auto& sg : parts)
        for (const auto& la : parts)
          for (const auto& mu : parts) {
            if (!subpartition_leq(la, mu)) continue;
            int d = degree_d(pi, sg, la);
            long bip = 0;
            for (const Matching& m : class_G(pi, sg, la, mu, true)) bip += 1;
            for (EtaPolicy p : kPolicies) {
              Poly h = poly_H_eta(pi, sg, la, mu, p);
              CHECK(bool(h.coeff(0) * Rat((long)z(la)) == Rat((long)z(mu) * bip)));
              if (h.is_zero()) continue;
              CHECK(h.degree() <= d);
              if (mu == la)
                CHECK(h == poly_G_eta(pi, sg, la, p));
              else
                CHECK(bool(h.coeff(d) == 0));
            }
          }
  }
}

TEST_CASE("oriented lists with free face type match unhandled lists") {
  for (int n = 1; n <= 4; n++) {
    std::vector<Partition> parts = all_partitions(n);
    for (const auto& w : parts)
      for (const auto& b : parts)
        for (const auto& mu : parts) {
          long long unh = 0;
          for (const Matching& d : class_G(b, w, mu, mu)) unh += is_unhandled_matching(mu, d);
          CHECK(count_oriented_lists_anyface(w, b, mu) == unh);
        }
  }
}
