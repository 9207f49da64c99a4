#pragma once
#include <map>
#include <vector>

#include "jacklab/partitions.hpp"
#include "jacklab/scalars.hpp"

namespace jacklab {

// Symmetric function of homogeneous degree n in the power-sum or monomial basis.
struct SymFunc {
  enum class Basis { P, M };
  Basis basis = Basis::P;
  int n = 0;
  std::map<Partition, RationalFunction> coeff;  // partitions of n only, no zeros

  RationalFunction at(const Partition& mu) const {
    auto it = coeff.find(mu);
    return it == coeff.end() ? RationalFunction() : it->second;
  }
};

// Everything degree-n the downstream modules re-read: basis matrices, Jack
// vectors, norms.  Built once per n; immutable afterwards.
struct JackTable {
  int n;
  std::vector<Partition> parts;  // all_partitions(n), reverse-lex
  std::map<Partition, int> index;
  std::vector<std::vector<Rat>> p_to_m;  // [i][j] = [m_{parts[j]}] p_{parts[i]}
  std::vector<std::vector<Rat>> m_to_p;  // inverse of p_to_m
  std::vector<std::vector<RationalFunction>> jack_p;  // [i][j] = [p_{parts[j]}] J_{parts[i]}
  std::vector<RationalFunction> norm;                 // <J,J>_alpha

  int idx(const Partition& mu) const { return index.at(mu); }
};

// Write-once per-n cache; safe to call concurrently.
const JackTable& jack_table(int n);

// m_mu expanded in the power-sum basis.
SymFunc monomial_in_powersum(const Partition& mu);

// <f,g>_alpha = sum_la f_la g_la alpha^{l(la)} z_la; both in the P basis and of
// equal degree, otherwise throws.
RationalFunction inner_product(const SymFunc& f, const SymFunc& g);

// J_la in the power-sum basis: dominance-triangular in the m basis,
// [m_{1^n}] J_la = n!, pairwise orthogonal.
SymFunc jack(const Partition& la);

// theta_mu(la) = [p_mu] J_la; throws "size mismatch" when |mu| != |la|.
RationalFunction theta(const Partition& mu, const Partition& la);

// <J_la, J_la>_alpha
RationalFunction jack_norm(const Partition& la);

}  // namespace jacklab
