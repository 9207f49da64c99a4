#include "jacklab/partitions.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jacklab {

void Partition::normalize() {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  for (int p : parts)
    if (p <= 0) throw std::runtime_error("nonpositive part");
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::mult(int i) const {
  return (int)std::count(parts.begin(), parts.end(), i);
}

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

std::vector<Partition> all_partitions(int n) {
  assert(n >= 0);
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.emplace_back(Partition{});
      out.back().parts = cur;
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long long z(const Partition& la) {
  long long r = 1;
  int i = 0;
  const auto& p = la.parts;
  while (i < (int)p.size()) {
    int j = i;
    while (j < (int)p.size() && p[j] == p[i]) ++j;
    int m = j - i;
    for (int t = 0; t < m; ++t) r *= p[i];
    for (int t = 2; t <= m; ++t) r *= t;
    i = j;
  }
  return r;
}

namespace {
// Assign each part of la (largest first) to one open slot of mu; slot capacities
// must end at zero.  Equal capacities are interchangeable, so only the first
// slot of each distinct remaining capacity is tried.
bool cover(const std::vector<int>& la, size_t i, std::vector<int>& cap) {
  if (i == la.size()) {
    for (int c : cap)
      if (c != 0) return false;
    return true;
  }
  int last = -1;
  for (size_t s = 0; s < cap.size(); ++s) {
    if (cap[s] < la[i] || cap[s] == last) continue;
    last = cap[s];
    cap[s] -= la[i];
    if (cover(la, i + 1, cap)) {
      cap[s] += la[i];
      return true;
    }
    cap[s] += la[i];
  }
  return false;
}
}  // namespace

bool subpartition_leq(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size()) return false;
  std::vector<int> cap = mu.parts;
  return cover(la.parts, 0, cap);
}

bool dominance_leq(const Partition& la, const Partition& mu) {
  if (la.size() != mu.size()) throw std::runtime_error("incomparable sizes");
  long long a = 0, b = 0;
  size_t k = std::max(la.parts.size(), mu.parts.size());
  for (size_t j = 0; j < k; ++j) {
    a += j < la.parts.size() ? la.parts[j] : 0;
    b += j < mu.parts.size() ? mu.parts[j] : 0;
    if (a > b) return false;
  }
  return true;
}

int degree_d(const Partition& pi, const Partition& sigma, const Partition& la) {
  return (pi.size() - pi.length()) + (sigma.size() - sigma.length()) -
         (la.size() - la.length());
}

Partition concat(const Partition& la, const Partition& mu) {
  std::vector<int> p = la.parts;
  p.insert(p.end(), mu.parts.begin(), mu.parts.end());
  return Partition(std::move(p));
}

Partition add_units(const Partition& pi, int k) {
  assert(k >= 0);
  std::vector<int> p = pi.parts;
  p.insert(p.end(), k, 1);
  return Partition(std::move(p));
}

Partition strip_units(const Partition& pi) {
  std::vector<int> p;
  for (int x : pi.parts)
    if (x > 1) p.push_back(x);
  return Partition(std::move(p));
}

}  // namespace jacklab
