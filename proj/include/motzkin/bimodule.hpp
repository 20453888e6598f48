#pragma once

#include <map>
#include <vector>

#include "motzkin/algebra.hpp"
#include "motzkin/gram.hpp"

namespace motzkin {

// Shape of a finite-stage bimodule picture: m points on the left side, m on
// the right side, k on the bottom.  Pictures are stored as (0, 2m+k) tangles
// with the flat bottom order L1..Lm (top to bottom), C1..Ck (left to right),
// Rm..R1 (bottom to top), which is the boundary circle of the frame.
struct FrameShape {
  int m = 0, k = 0;
  int points() const { return 2 * m + k; }
  int flat_L(int i) const { return i - 1; }          // 1-based
  int flat_C(int j) const { return m + j - 1; }      // 1-based
  int flat_R(int i) const { return 2 * m + k - i; }  // 1-based
  bool operator==(const FrameShape&) const = default;
};

// An element of V_m(p)-style spaces: a linear combination of frame pictures.
class BimodVector {
 public:
  BimodVector(ParamPtr P, FrameShape s) : P_(std::move(P)), s_(s) {}
  static BimodVector from_tangle(const ParamPtr& P, FrameShape s,
                                 const Tangle& t, const Scalar& c);

  const ParamPtr& param() const { return P_; }
  const FrameShape& shape() const { return s_; }
  const std::map<Tangle, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Tangle& t, const Scalar& c);

  BimodVector operator+(const BimodVector& o) const;
  BimodVector operator-(const BimodVector& o) const;
  BimodVector operator*(const Scalar& c) const;
  bool operator==(const BimodVector& o) const;

  std::string str() const;

 private:
  ParamPtr P_;
  FrameShape s_;
  std::map<Tangle, Scalar> terms_;
};

// bottom composition: attach p (shape (k,k)) below the frame's C block
BimodVector compose_bottom(const BimodVector& v, const AlgElem& p);

// left/right module actions of M(m,m); they commute
BimodVector act_left(const AlgElem& a, const BimodVector& v);
BimodVector act_right(const BimodVector& v, const AlgElem& b);

// scalar inner product: full contraction of u against v, normalized by
// D^{-(m + ceil(k/2))} to match `pairing` under the flattening embedding
Scalar inner(const BimodVector& u, const BimodVector& v);

// M-valued pairing <u,v>_M in M(m,m): contract everything except the left
// boundaries; satisfies tr(x <u,v>_M) = inner(x u, v)
AlgElem pairing_M(const BimodVector& u, const BimodVector& v);

// tensor map T0: glue v's right side to u's left side; bottom becomes p|q
BimodVector tensor_T0(const BimodVector& v, const BimodVector& u);

// D-exponent in the exact finite-stage isometry identity
//   inner(T0(v,u), T0(v',u')) = D^excess * inner(act_right(v, <u,u'>_M), v');
// zero unless both bottom counts are odd (where the two flattening devices
// overlap by one column)
int tensor_isometry_excess(int kp, int kq);

// flattening into M(m + ceil(k/2)): fold the bottom halves up the sides
// (odd k first appends an isolated point, the p_1 insertion device)
AlgElem embed(const BimodVector& v);

// the spanning family {picture composed with p} over all frame pictures
struct BimodSpace {
  ParamPtr P;
  FrameShape shape;
  AlgElem p;  // self-adjoint idempotent of shape (k,k)
  std::vector<BimodVector> basis;
};

BimodSpace bimod_basis(int m, const AlgElem& p, int bound = 18);

// Gram matrix of the spanning family under `inner`
std::vector<std::vector<Scalar>> bimod_gram(const BimodSpace& space);
// stage dimension dim H_m(p) = rank of the Gram form
int bimod_dim(const BimodSpace& space);

// quantum dimension d^i P_i(tau) of H(g_i)
Scalar qdim(int i, const ParamPtr& P);

// D^k tr(p) for a self-adjoint idempotent p of shape (k,k)
Scalar dim_bimodule(const AlgElem& p);

// fusion labels (k,i) for the bimodules H_{k,i}
struct FusionLabel {
  int k = 0, i = 0;
  auto operator<=>(const FusionLabel&) const = default;
  std::string str() const {
    return "(" + std::to_string(k) + "," + std::to_string(i) + ")";
  }
};

// cap on the second label: nu - 2 at a root of unity, "unbounded" otherwise
int fusion_cap(const ParamPtr& P);

// truncated Clebsch-Gordan rule: labels (k_a + k_b, t) for t from |i-j| in
// steps of 2 up to min(i+j, 2(k_a+k_b)-(i+j), 2 cap-(i+j))
std::vector<FusionLabel> fuse(const FusionLabel& a, const FusionLabel& b,
                              const ParamPtr& P);

struct FusionReport {
  bool commutative = false;
  bool associative = false;
  bool qdim_homomorphism = false;
  bool a_n_adjacency = false;
  bool multiplicity_free = false;
  bool all() const {
    return commutative && associative && qdim_homomorphism && a_n_adjacency &&
           multiplicity_free;
  }
};

FusionReport verify_fusion_ring(const ParamPtr& P, int label_bound);

}  // namespace motzkin
