#pragma once
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace jacklab {

// Weakly decreasing sequence of positive integers; empty partition allowed.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  int size() const;    // |lambda|
  int length() const { return (int)parts.size(); }
  int mult(int i) const;  // m_i(lambda)
  int m1() const { return mult(1); }
  bool empty() const { return parts.empty(); }

  auto operator<=>(const Partition&) const = default;

  std::string str() const;  // "[3,1,1]", "[]"

 private:
  void normalize();  // sorts decreasing, rejects nonpositive parts
};

// All partitions of n in reverse-lexicographic order, [(n), ..., (1^n)]; [{}] for n=0.
std::vector<Partition> all_partitions(int n);

// z_lambda = prod_i i^{m_i} m_i!
long long z(const Partition& la);

// True iff some set-partition of la's parts has block sums equal to mu's parts.
// False whenever |la| != |mu|.
bool subpartition_leq(const Partition& la, const Partition& mu);

// Dominance order on partitions of equal size; throws "incomparable sizes" otherwise.
bool dominance_leq(const Partition& la, const Partition& mu);

// d(pi,sigma;la) = (|pi|-l(pi)) + (|sigma|-l(sigma)) - (|la|-l(la))
int degree_d(const Partition& pi, const Partition& sigma, const Partition& la);

// Multiset union of parts.
Partition concat(const Partition& la, const Partition& mu);

// pi with k extra unit parts.
Partition add_units(const Partition& pi, int k);

// pi with every unit part removed.
Partition strip_units(const Partition& pi);

}  // namespace jacklab
