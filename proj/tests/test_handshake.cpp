#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tuple>

#include "jacklab/handshake.hpp"
#include "jacklab/maps.hpp"
#include "jacklab/matchings.hpp"

using namespace jacklab;

static long long bino(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Bipartite census route to |M~^{.;mu}_{pi,sg}|, summing (z_mu/z_nu) class
// sizes over all face profiles nu from precomputed per-diagram censuses.
static long long m_tilde(const std::map<Partition, MatchingCensus>& cens,
                         const Partition& pi, const Partition& sg,
                         const Partition& mu) {
  long long total = 0;
  for (const auto& [nu, table] : cens) {
    auto it = table.find({sg, pi, mu, true});
    if (it == table.end()) continue;
    long long num = it->second * z(mu);
    REQUIRE(num % z(nu) == 0);
    total += num / z(nu);
  }
  return total;
}

static std::vector<Partition> partitions_up_to(int nmax) {
  std::vector<Partition> out;
  for (int n = 1; n <= nmax; ++n)
    for (const Partition& p : all_partitions(n)) out.push_back(p);
  return out;
}

TEST_CASE("pairing counts golden") {
  CHECK(count_P({3, 2}, {3, 3}, {3, 3}) == 72);
  CHECK(count_P({3, 3}, {3, 2}, {3, 3}) == 72);
  CHECK(count_P({1}, {1}, {1}) == 1);
  CHECK(count_P({2}, {1, 1}, {1, 1}) == 0);
  CHECK(count_P({2}, {2}, {2, 1, 1}) == 0);
  CHECK(count_P({}, {}, {}) == 1);

  std::map<Partition, long long> two_two = {{{2}, 2}, {{2, 2}, 1}, {{3}, 4}};
  CHECK(count_P_table({2}, {2}) == two_two);
  std::map<Partition, long long> three_three = {
      {{3}, 6}, {{3, 3}, 1}, {{4}, 18}, {{5}, 9}};
  CHECK(count_P_table({3}, {3}) == three_three);
}

TEST_CASE("pairing histogram totals and edge budgets") {
  for (const Partition& pi : partitions_up_to(4)) {
    for (const Partition& sg : partitions_up_to(4)) {
      auto table = count_P_table(pi, sg);
      long long seen = 0;
      for (const auto& [mu, cnt] : table) {
        seen += cnt;
        int p = pi.size() + sg.size() - mu.size();
        CHECK(p >= 0);
        CHECK(p <= std::min(pi.size(), sg.size()));
        CHECK(subpartition_leq(add_units(pi, mu.size() - pi.size()), mu));
        CHECK(subpartition_leq(add_units(sg, mu.size() - sg.size()), mu));
      }
      long long all = 0;  // sum_p binom(|pi|,p) * |sg|!/(|sg|-p)!
      for (int p = 0; p <= std::min(pi.size(), sg.size()); ++p) {
        long long arr = 1;
        for (int i = 0; i < p; ++i) arr *= sg.size() - i;
        all += bino(pi.size(), p) * arr;
      }
      CHECK(seen == all);
    }
  }
}

TEST_CASE("combinatorial constant golden and errors") {
  CHECK(c_constant({3, 2}, {3, 3}, {3, 3}) == 1);
  CHECK(c_constant({1}, {1}, {2, 1}) == 5);
  CHECK(c_constant({2}, {2}, {1, 1}) == 0);
  CHECK_THROWS_WITH(c_constant({3}, {1}, {2}), "pi or sigma exceeds mu");

  // No units in mu: the k-sum collapses to its k = 0 term.
  for (int nmu = 1; nmu <= 6; ++nmu)
    for (const Partition& mu : all_partitions(nmu)) {
      if (mu.m1() != 0) continue;
      for (const Partition& pi : partitions_up_to(nmu))
        for (const Partition& sg : partitions_up_to(nmu))
          CHECK(c_constant(pi, sg, mu) ==
                bino(pi.m1() + mu.size() - pi.size(), pi.m1()) *
                    bino(sg.m1() + mu.size() - sg.size(), sg.m1()));
    }

  // Same total size: 1 whenever both vertex-degree refinements hold.
  for (int n = 1; n <= 5; ++n)
    for (const Partition& mu : all_partitions(n))
      for (const Partition& pi : all_partitions(n))
        for (const Partition& sg : all_partitions(n)) {
          if (!subpartition_leq(pi, mu) || !subpartition_leq(sg, mu)) continue;
          CHECK(c_constant(pi, sg, mu) == 1);
        }
}

TEST_CASE("pairing counts match the delta-leading structure constants") {
  // [delta^{d(pi,sg;mu)}] g^mu_{pi,sg} read off the frozen Ch2*Ch2, Ch3*Ch2,
  // Ch3*Ch3 expansion tables.
  struct Row {
    Partition pi, sg, mu;
    long long top;
  };
  const std::vector<Row> rows = {
      {{2}, {2}, {1, 1}, 0},     {{2}, {2}, {2}, 2},
      {{2}, {2}, {2, 2}, 1},     {{2}, {2}, {3}, 4},
      {{3}, {2}, {3}, 6},        {{3}, {2}, {3, 2}, 1},
      {{3}, {2}, {2, 1}, 0},     {{3}, {2}, {4}, 6},
      {{3}, {3}, {3}, 6},        {{3}, {3}, {2, 1}, 0},
      {{3}, {3}, {4}, 18},       {{3}, {3}, {1, 1, 1}, 0},
      {{3}, {3}, {3, 1}, 0},     {{3}, {3}, {2, 2}, 0},
      {{3}, {3}, {5}, 9},        {{3}, {3}, {3, 3}, 1},
  };
  for (const Row& r : rows) CHECK(count_P(r.pi, r.sg, r.mu) == r.top);
}

TEST_CASE("pairing count factorises into constant, symmetry factor, lists") {
  // count_P(pi,sg,mu) * z_mu = C(pi,sg;mu) * z_pi * z_sg * |M~^{.;mu}| over
  // all 1 <= |pi|,|sg| <= |mu| <= 6, padded to |mu| on the list side.
  std::vector<Partition> small = partitions_up_to(6);
  std::map<std::pair<Partition, Partition>, std::map<Partition, long long>>
      tables;
  for (int nmu = 1; nmu <= 6; ++nmu) {
    std::map<Partition, MatchingCensus> cens;
    for (const Partition& nu : all_partitions(nmu))
      cens[nu] = matching_census(nu);
    for (const Partition& mu : all_partitions(nmu)) {
      for (const Partition& pi : small) {
        if (pi.size() > nmu) continue;
        for (const Partition& sg : small) {
          if (sg.size() > nmu) continue;
          auto key = std::make_pair(pi, sg);
          auto it = tables.find(key);
          if (it == tables.end())
            it = tables.emplace(key, count_P_table(pi, sg)).first;
          auto hit = it->second.find(mu);
          long long lhs = hit == it->second.end() ? 0 : hit->second;
          long long lists = m_tilde(cens, add_units(pi, nmu - pi.size()),
                                    add_units(sg, nmu - sg.size()), mu);
          long long rhs = c_constant(pi, sg, mu) * z(pi) * z(sg) * lists;
          CHECK(lhs * z(mu) == rhs);
        }
      }
    }
  }
}

TEST_CASE("census route agrees with the direct list count") {
  for (int n = 1; n <= 4; ++n) {
    std::map<Partition, MatchingCensus> cens;
    for (const Partition& nu : all_partitions(n))
      cens[nu] = matching_census(nu);
    for (const Partition& pi : all_partitions(n))
      for (const Partition& sg : all_partitions(n))
        for (const Partition& mu : all_partitions(n))
          CHECK(m_tilde(cens, pi, sg, mu) ==
                count_oriented_lists_anyface(pi, sg, mu));
  }
  // The twelve-list set behind 72 = 1 * (6*18/18) * 12, in both colourings.
  CHECK(count_oriented_lists_anyface({3, 3}, {3, 2, 1}, {3, 3}) == 12);
  CHECK(count_oriented_lists_anyface({3, 2, 1}, {3, 3}, {3, 3}) == 12);
}

TEST_CASE("nonempty pairing classes: necessity holds, sufficiency fails") {
  // count_P > 0 forces |pi|,|sg| <= |mu| and both padded refinements, but the
  // converse has exactly 895 failures with |mu| <= 5, the least being
  // pi = sg = (1), mu = (2).
  long long necessity_broken = 0;
  std::vector<std::tuple<Partition, Partition, Partition>> gaps;
  for (int nmu = 1; nmu <= 5; ++nmu)
    for (const Partition& mu : all_partitions(nmu))
      for (const Partition& pi : partitions_up_to(nmu))
        for (const Partition& sg : partitions_up_to(nmu)) {
          bool nonempty = count_P(pi, sg, mu) > 0;
          bool conds =
              subpartition_leq(add_units(pi, nmu - pi.size()), mu) &&
              subpartition_leq(add_units(sg, nmu - sg.size()), mu);
          if (nonempty && !conds) ++necessity_broken;
          if (conds && !nonempty) gaps.emplace_back(pi, sg, mu);
        }
  CHECK(necessity_broken == 0);
  CHECK((long long)gaps.size() == 895);
  REQUIRE(!gaps.empty());
  CHECK(std::get<0>(gaps.front()) == Partition{1});
  CHECK(std::get<1>(gaps.front()) == Partition{1});
  CHECK(std::get<2>(gaps.front()) == Partition{2});
}
