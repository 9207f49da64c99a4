#include "jacklab/embeddings.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace jacklab {

BicoloredGraph graph_of_partition(const Partition& pi, bool conjugate) {
  BicoloredGraph g;
  int leaves = pi.size();
  if (conjugate) {
    g.whites = pi.length();
    g.blacks = leaves;
  } else {
    g.blacks = pi.length();
    g.whites = leaves;
  }
  int next = 0;
  for (int i = 0; i < pi.length(); i++)
    for (int j = 0; j < pi.parts[i]; j++, next++)
      g.edges.push_back(conjugate ? std::make_pair(next, i) : std::make_pair(i, next));
  return g;
}

long long count_embeddings(const BicoloredGraph& g, const Partition& la, bool negative) {
  if ((int)g.edges.size() > la.size()) return 0;
  int rows = la.length();
  int cols = rows ? la.parts[0] : 0;
  int nb = g.blacks;
  int V = nb + g.whites;

  std::vector<int> deg(V, 0);
  for (const auto& [b, w] : g.edges) {
    deg[b]++;
    deg[nb + w]++;
  }
  std::vector<int> order(V);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return deg[u] > deg[v]; });
  std::vector<int> rank(V);
  for (int k = 0; k < V; k++) rank[order[k]] = k;

  // An edge is verified once its later endpoint gets assigned.
  std::vector<std::vector<int>> check_at(V);
  for (int e = 0; e < (int)g.edges.size(); e++) {
    const auto& [b, w] = g.edges[e];
    check_at[rank[b] > rank[nb + w] ? b : nb + w].push_back(e);
  }

  std::vector<int> assign(V, 0);
  std::vector<char> used((rows + 1) * (cols + 1), 0);
  long long count = 0;
  std::function<void(int)> rec = [&](int k) {
    if (k == V) {
      count++;
      return;
    }
    int v = order[k];
    bool to_rows = (v < nb) != negative;
    int limit = to_rows ? rows : cols;
    for (int val = 1; val <= limit; val++) {
      assign[v] = val;
      int marked[8];
      int nmarked = 0;
      bool ok = true;
      for (int e : check_at[v]) {
        const auto& [b, w] = g.edges[e];
        int fb = assign[b], fw = assign[nb + w];
        int row = negative ? fw : fb, col = negative ? fb : fw;
        int box = row * (cols + 1) + col;
        if (col > la.parts[row - 1] || used[box]) {
          ok = false;
          break;
        }
        used[box] = 1;
        assert(nmarked < 8);
        marked[nmarked++] = box;
      }
      if (ok) rec(k + 1);
      while (nmarked) used[marked[--nmarked]] = 0;
    }
    assign[v] = 0;
  };
  rec(0);
  return count;
}

static long long falling(long long x, int k) {
  long long p = 1;
  for (int i = 0; i < k; i++) p *= x - i;
  return k > x ? 0 : p;
}

long long hat_p(const Partition& pi, const Partition& la) {
  int lp = pi.length(), lr = la.length();
  if (lp == 0) return 1;
  if (lr == 0) return 0;
  std::vector<int> f(lp, 0);
  long long total = 0;
  for (;;) {
    std::vector<int> load(lr, 0);
    for (int i = 0; i < lp; i++) load[f[i]] += pi.parts[i];
    long long prod = 1;
    for (int r = 0; r < lr && prod; r++) prod *= falling(la.parts[r], load[r]);
    total += prod;
    int i = 0;
    while (i < lp && ++f[i] == lr) f[i++] = 0;
    if (i == lp) break;
  }
  return total;
}

}  // namespace jacklab
