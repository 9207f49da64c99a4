#include "jacklab/handshake.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace jacklab {

namespace {

long long ibinom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Depth-first sweep over all partial injective pairings, one white slot at a
// time (skip it or mate it with any free black slot).
struct PairingScan {
  int nw = 0, nb = 0;         // labelled vertex counts
  std::vector<int> wvert;     // white slot -> vertex
  std::vector<int> bvert;     // black slot -> vertex
  std::vector<int> mate;      // white slot -> black slot, -1 unpaired
  std::vector<char> taken;    // black slot already mated
  std::map<Partition, long long> hist;

  void record() {
    std::vector<int> up(nw + nb);
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int x) {
      while (up[x] != x) {
        up[x] = up[up[x]];
        x = up[x];
      }
      return x;
    };
    for (int ws = 0; ws < (int)mate.size(); ++ws)
      if (mate[ws] >= 0) up[find(wvert[ws])] = find(nw + bvert[mate[ws]]);
    // One edge per slot, except a mated slot pair forms a single edge.
    std::vector<int> edges(nw + nb, 0);
    for (int ws = 0; ws < (int)wvert.size(); ++ws) ++edges[find(wvert[ws])];
    for (int bs = 0; bs < (int)bvert.size(); ++bs) ++edges[find(nw + bvert[bs])];
    for (int ws = 0; ws < (int)mate.size(); ++ws)
      if (mate[ws] >= 0) --edges[find(wvert[ws])];
    std::vector<int> comps;
    for (int v = 0; v < nw + nb; ++v)
      if (find(v) == v) comps.push_back(edges[v]);
    ++hist[Partition(std::move(comps))];
  }

  void extend(int ws) {
    if (ws == (int)wvert.size()) {
      record();
      return;
    }
    extend(ws + 1);
    for (int bs = 0; bs < (int)bvert.size(); ++bs) {
      if (taken[bs]) continue;
      taken[bs] = 1;
      mate[ws] = bs;
      extend(ws + 1);
      mate[ws] = -1;
      taken[bs] = 0;
    }
  }
};

}  // namespace

std::map<Partition, long long> count_P_table(const Partition& pi,
                                             const Partition& sg) {
  PairingScan scan;
  scan.nw = pi.length();
  scan.nb = sg.length();
  for (int i = 0; i < pi.length(); ++i)
    scan.wvert.insert(scan.wvert.end(), pi.parts[i], i);
  for (int j = 0; j < sg.length(); ++j)
    scan.bvert.insert(scan.bvert.end(), sg.parts[j], j);
  scan.mate.assign(scan.wvert.size(), -1);
  scan.taken.assign(scan.bvert.size(), 0);
  scan.extend(0);
  return std::move(scan.hist);
}

long long count_P(const Partition& pi, const Partition& sg,
                  const Partition& mu) {
  int p = pi.size() + sg.size() - mu.size();
  if (p < 0 || p > std::min(pi.size(), sg.size())) return 0;
  auto hist = count_P_table(pi, sg);
  auto it = hist.find(mu);
  return it == hist.end() ? 0 : it->second;
}

long long c_constant(const Partition& pi, const Partition& sg,
                     const Partition& mu) {
  if (pi.size() > mu.size() || sg.size() > mu.size())
    throw std::runtime_error("pi or sigma exceeds mu");
  long long total = 0;
  for (int k = 0; k <= mu.m1(); ++k)
    total += ibinom(mu.m1(), k) *
             ibinom(pi.m1() + mu.size() - pi.size() - mu.m1(), pi.m1() - k) *
             ibinom(sg.m1() + mu.size() - sg.size() - mu.m1() + k,
                    sg.m1() - mu.m1() + k);
  return total;
}

}  // namespace jacklab
