#pragma once

#include <vector>

#include "motzkin/algebra.hpp"
#include "motzkin/gram.hpp"

namespace motzkin {

// The tower g_1, g_2, ... of Jones-Wenzl-type idempotents, built by the
// recursion g_{k+1} = g_k (1 - p_{k+1}) - (lambda_k / D) g_k e_k g_k with
// g_1 = 1 - p_1 and lambda_k = (D/d) P_{k-1}(tau)/P_k(tau).  Construction of
// g_{k+1} requires P_k(tau) != 0.
//
// (The recursion prefactor is lambda_k/D = (1/d) P_{k-1}/P_k: with the
// diagrammatic normalization e_k^2 = D e_k this is the unique coefficient
// making g_{k+1} idempotent, as verify_jw checks.)
class JWTower {
 public:
  explicit JWTower(ParamPtr P) : P_(std::move(P)) {}

  const ParamPtr& param() const { return P_; }
  // g_k as an element of M_k(D); throws GenericityViolation when some
  // earlier stage has P_j(tau) = 0
  const AlgElem& g(int k);
  // largest k for which g_k is constructible, capped at `upto`
  int max_constructible(int upto);

 private:
  ParamPtr P_;
  std::vector<AlgElem> g_;
};

AlgElem jw(int k, const ParamPtr& P);

struct JWReport {
  // the five defining identities of the tower
  bool annihilation = false;   // g_k e_i = g_k l_i = ... = 0 for i < k
  bool projection = false;     // g_k = g_k* = g_k^2
  bool expectation = false;    // E(g_k) = (d P_k / D P_{k-1}) g_{k-1}
  bool absorption = false;     // g_i g_j = g_j for i <= j
  bool unit_coefficient = false;  // coefficient of 1_k in g_k is 1
  Scalar trace;                // tr(g_k), for reporting
  bool all() const {
    return annihilation && projection && expectation && absorption &&
           unit_coefficient;
  }
};

JWReport verify_jw(int k, const ParamPtr& P);

// q_{k,i} = g_i p_{i+1} ... p_k (g_0 = empty product), the representative
// minimal projection of the i-th block of A_k
AlgElem minimal_projection(int k, int i, const ParamPtr& P);

// A labeled system of matrix units.
struct MatrixUnitFamily {
  ParamPtr P;  // possibly extended by sqrt(D-1)
  struct Unit {
    int block, i, j;
    AlgElem elem;
  };
  std::vector<Unit> units;
  std::vector<int> block_sizes;
};

// n = 2: the nine explicit elements (three blocks, needing sqrt(D-1));
// n >= 3: the top-block family E^{(n-1)}_{i,j} built from r's, g_{n-1}, l's
// and p_n, together with E^{(n)} = g_n.
MatrixUnitFamily matrix_units(int n, const ParamPtr& P);

struct MatrixUnitReport {
  int checked = 0;
  int exact_defects = 0;    // products violating the relations exactly
  int radical_defects = 0;  // violations that survive modulo the radical
  bool pass_exact() const { return exact_defects == 0; }
  bool pass_mod_radical() const { return radical_defects == 0; }
};

// checks x_{ij} x_{kl} - delta family/jk x_{il} against the radical of the
// Gram form
MatrixUnitReport verify_matrix_units(const MatrixUnitFamily& fam,
                                     const GramForm& gram);

}  // namespace motzkin
