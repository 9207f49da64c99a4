#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacklab/partitions.hpp"

namespace jacklab {

// Perfect matching on the 2n points {1,..,n} u {1^,..,n^};
// point 2(i-1) encodes the plain label i, point 2(i-1)+1 encodes i^.
struct Matching {
  int n = 0;
  std::vector<int> pair_;  // involution without fixed points, size 2n

  bool operator==(const Matching&) const = default;
  std::string str() const;  // e.g. {{1,2^},{2,1^}}
};

// eps = {{1,1^},...,{n,n^}}.
Matching eps_matching(int n);

// delta_la: within the block of labels L+1..L+la_s (L = la_1+..+la_{s-1}),
// pairs i with (i+1)^ cyclically.
Matching delta_matching(const Partition& la);

// All (2n-1)!! matchings, smallest-unpaired-first lexicographic order.
void for_each_matching(int n, const std::function<void(const Matching&)>& fn);
std::vector<Matching> enumerate_matchings(int n);

// Halves of the alternating-cycle lengths of the union of two matchings.
Partition cycle_type(const Matching& a, const Matching& b);

// Halves of the per-component point counts of the union of three matchings.
Partition component_type(const Matching& a, const Matching& b, const Matching& c);

// True iff every pair joins a plain label with a hatted label.
bool is_bipartite(const Matching& m);

// All delta in F_n with Lambda(delta, eps) = pi and Lambda(delta, delta_la) = sigma;
// when mu is given, additionally Lambda(delta, eps, delta_la) = mu; when
// bipartite_only, only bipartite delta.  Enumeration order.
std::vector<Matching> class_G(const Partition& pi, const Partition& sigma,
                              const Partition& la,
                              const std::optional<Partition>& mu = std::nullopt,
                              bool bipartite_only = false);

// Joint statistics of all of F_n against a fixed diagram la.
struct CensusKey {
  Partition with_eps;    // Lambda(delta, eps)
  Partition with_delta;  // Lambda(delta, delta_la)
  Partition components;  // Lambda(delta, eps, delta_la)
  bool bipartite = false;

  auto operator<=>(const CensusKey&) const = default;
};
using MatchingCensus = std::map<CensusKey, long long>;

MatchingCensus matching_census_serial(const Partition& la);
// Same histogram, sharded over the partner of point 0 with OpenMP.
MatchingCensus matching_census(const Partition& la);

}  // namespace jacklab
