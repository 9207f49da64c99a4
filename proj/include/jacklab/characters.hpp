#pragma once
#include <map>

#include "jacklab/jack.hpp"
#include "jacklab/partitions.hpp"
#include "jacklab/scalars.hpp"

namespace jacklab {

// Value of a normalized character: Laurent polynomial in A, degree <= |pi|-l(pi).
struct CharacterValue {
  LaurentA value;
};

// mu -> g^mu_{pi,sigma} as a polynomial in delta = A - A^{-1}; zero entries omitted.
using StructureConstantTable = std::map<Partition, DeltaPolynomial>;

// Normalized character Ch_pi(lambda): 0 when |lambda| < |pi|, otherwise
//   A^{-(|pi|-l(pi))} * C(|lambda|-|pi|+m1(pi), m1(pi)) * z_pi
//     * theta_{pi union 1^{|lambda|-|pi|}}(lambda)         at alpha = A^2.
// Ch_{} = 1 on every diagram.
CharacterValue ch(const Partition& pi, const Partition& la);

// Coefficient of A^{|pi|-l(pi)} in ch(pi, la).
// Throws "AtopCh violated" unless the extraction is a nonnegative integer.
long a_top_ch(const Partition& pi, const Partition& la);

// min over i=1,2,3 of n_i(pi)+n_i(sigma)-n_i(mu), where
// n1 = |.|+l, n2 = |.|-l, n3 = |.|-l+m1.
int g_degree_bound(const Partition& pi, const Partition& sigma, const Partition& mu);

// The unique table with ch(pi)*ch(sigma) = sum_{|mu| <= |pi|+|sigma|} g^mu(delta) ch(mu)
// pointwise on every diagram.  Solved by evaluating both sides on all diagrams of each
// size m = 0..|pi|+|sigma| and forward-substituting size blocks; the vanishing of
// ch(mu, lambda) for |lambda| < |mu| makes the system block-triangular.
// Write-once per-pair cache; safe to call concurrently.
// Throws "theta basis degenerate" if a diagonal block is singular (never expected).
const StructureConstantTable& structure_constants(const Partition& pi, const Partition& sigma);

// Connection coefficient assembled from structure constants; pi, sigma, mu all of size n:
//   A^{d(pi,sigma;mu)} * (z_mut / (z_pit * z_sigt))
//     * sum_i g^{mut union 1^i}_{pit,sigt} * i! * C(n-|mut|, i)
// with t = strip_units.  The result is converted exactly to a polynomial in beta;
// a non-polynomial outcome throws (signals a bug upstream).
BetaPolynomial c_from_g(const Partition& pi, const Partition& sigma, const Partition& mu);

}  // namespace jacklab
