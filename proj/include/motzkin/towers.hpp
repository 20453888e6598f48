#pragma once

#include <vector>

#include "motzkin/algebra.hpp"
#include "motzkin/gram.hpp"

namespace motzkin {

// The tridiagonal-with-diagonal 0/1 matrix Q_nu of size (nu-1) x (nu-1),
// q_ij = 1 iff |i-j| <= 1, with xi the first coordinate vector.
struct QMatrix {
  int nu = 0;
  static QMatrix make(int nu);
  int size() const { return nu - 1; }
  std::vector<Int> apply(const std::vector<Int>& v) const;
  std::vector<Int> power_xi(int k) const;  // Q^k xi
  QPoly det_i_minus_xq() const;            // det(I - x Q) over Z
};

// Block dimensions of A_k: (m_{k,0},...,m_{k,k}) for generic parameters,
// the truncated vector Q_nu^k xi (trailing zeros trimmed) at roots of unity.
std::vector<Int> block_dims(int k, const LoopParam& param);

struct BratteliDiagram {
  LoopParam param;
  std::vector<std::vector<Int>> levels;          // dims per level 0..depth
  std::vector<std::vector<std::vector<int>>> inclusions;  // 0/1, level k -> k+1
  std::string dot() const;
  std::string json() const;
};

BratteliDiagram bratteli(const LoopParam& param, int depth);

// w_k: entry i is (d^i / D^k) P_i(tau), i = 0..min(k, nu-2)
std::vector<Scalar> weight_vector(int k, const ParamPtr& P);

// dim H_j as the brute-force Gram rank of M(floor(j/2), ceil(j/2))
Int gns_dim(int j, const ParamPtr& P, int bound = 18);

// dim H_k at D = 1 + 2cos(pi/nu), evaluated exactly as <Q_nu^k xi, xi>
Int dim_closed_form(int k, int nu);

// first N+1 coefficients of the resolvent (1,1)-entry
// <(I - x Q_nu)^{-1} xi, xi>, by the linear recurrence from det(I - x Q)
std::vector<Int> gf_coefficients(int nu, int N);

// Comparison of the resolvent series against the series of
// P_{nu-1}(x)/P_nu(x); `first_mismatch` is -1 when they agree up to N.
struct GfComparison {
  std::vector<Int> resolvent;
  std::vector<Rat> chebyshev_ratio;
  int first_mismatch = -1;
};
GfComparison gf_chebyshev_comparison(int nu, int N);

// Relative commutant table for D >= 3 rational: blocks indexed by the
// compositions (i,j,l) of k-1 with trinomial dimensions; q solves
// q + 1/q = D - 1 in Q(sqrt((D-1)^2 - 4)).
struct CommutantBlock {
  int i, j, l;
  Int dim;
  Scalar weight;        // q^{j-l} / (1+q+q^{-1})^{k-1}
  Scalar d_power_weight;  // the D^{j-l} / (1+D+D^{-1})^{k-1} reading, flagged
};
struct CommutantTable {
  int k = 0;
  Rat D;
  ParamPtr field;  // rationals, or rationals with sqrt layer
  Scalar q;
  std::vector<CommutantBlock> blocks;
  Int dim_total() const;  // sum of dim^2
};

CommutantTable commutant_table(int k, const Rat& D);

// [M : M_{-k}] = D^{2k}
Scalar index_report(int k, const ParamPtr& P);

// dim of the relative commutant at a root of unity: sum of squared block
// dimensions of A_{k-1}
Int commutant_dim_root(int k, int nu);

}  // namespace motzkin
