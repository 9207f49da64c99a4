#pragma once
#include <map>

#include "jacklab/partitions.hpp"

namespace jacklab {

// Slot-pairing outcomes P^mu_{pi,sg}: l(pi) labelled white vertices carry
// pi_i linearly ordered half-edge slots (root slot first), l(sg) labelled
// black vertices carry sg_j slots, and an outcome is a partial injective
// pairing of white slots with black slots; every unpaired slot closes off as
// a pendant edge to a fresh unlabelled vertex of the opposite colour.
// Distinct pairings give distinct collections, so no isomorphism dedup.

// Histogram of all pairings by component edge-count multiset; an outcome with
// p paired slots has |pi| + |sg| - p edges in total.
std::map<Partition, long long> count_P_table(const Partition& pi,
                                             const Partition& sg);

// |P^mu_{pi,sg}| = number of pairings whose component multiset is exactly mu.
long long count_P(const Partition& pi, const Partition& sg,
                  const Partition& mu);

// C(pi,sg;mu) = sum_{k=0}^{m1(mu)} binom(m1(mu),k)
//     * binom(m1(pi)+|mu|-|pi|-m1(mu), m1(pi)-k)
//     * binom(m1(sg)+|mu|-|sg|-m1(mu)+k, m1(sg)-m1(mu)+k),
// out-of-range binomials contributing zero.  Throws "pi or sigma exceeds mu"
// unless |pi| <= |mu| and |sg| <= |mu|.
long long c_constant(const Partition& pi, const Partition& sg,
                     const Partition& mu);

}  // namespace jacklab
