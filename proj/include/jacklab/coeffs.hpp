#pragma once
#include <map>
#include <tuple>

#include "jacklab/partitions.hpp"
#include "jacklab/scalars.hpp"

namespace jacklab {

// (pi, sigma, la), all partitions of the same integer.
using TripleKey = std::tuple<Partition, Partition, Partition>;
using TripleTable = std::map<TripleKey, BetaPolynomial>;

// Connection coefficients of the theta basis: the unique solution of
// theta_pi(la) theta_sg(la) = sum_mu c^mu_{pi,sg} theta_mu(la) over la of n,
// cross-checked entry by entry against the Cauchy kernel rearrangement
//   c^mu_{pi,sg} = alpha^{l(mu)} z_mu sum_th theta_pi(th) theta_sg(th)
//                  theta_mu(th) / <J_th, J_th>
// and converted to polynomials in beta = alpha - 1.  Write-once per-n cache;
// safe to call concurrently.  Throws "connection oracle disagreement" or
// "not a polynomial in beta".
const TripleTable& connection_c(int n);

// h^la_{pi,sg} for 1 <= |la| <= n_max, the coefficients of
// alpha t d/dt log(1 + S) where S is the formal t-series whose degree-n term
// has coefficient c^la_{pi,sg} / (alpha^{l(la)} z_la) at the triple monomial
// (pi, sg, la) and monomials multiply by concatenating all three slots.
// Values are kept as rational functions in alpha.
std::map<int, std::map<TripleKey, RationalFunction>> connection_h(int n_max);

// Top-degree factorisation through one-part pieces:
//   [alpha^{d(pi,sg;la)}] c^la_{pi,sg}
//     = sum prod_i [alpha^{la_i + 1 - l(pi^i) - l(sg^i)}] h^{(la_i)}_{pi^i,sg^i}
// summed over ordered splittings of pi and sg into l(la) sub-multisets with
// |pi^i| = |sg^i| = la_i, each distinct splitting once.  Returns whether the
// two sides agree.  Throws "size mismatch" unless |pi| = |sg| = |la| >= 1.
bool check_top_factorisation(const Partition& pi, const Partition& sg, const Partition& la);

}  // namespace jacklab
