#pragma once

#include <map>
#include <string>
#include <vector>

#include "motzkin/param.hpp"
#include "motzkin/tangle.hpp"

namespace motzkin {

// An element of M_n(D), or more generally a formal linear combination of
// same-shape (m,n)-tangles with exact field coefficients.  Zero coefficients
// are never stored; terms are kept in the canonical Tangle order.
class AlgElem {
 public:
  AlgElem(ParamPtr P, int top, int bottom)
      : P_(std::move(P)), top_(top), bottom_(bottom) {}
  static AlgElem from_tangle(const ParamPtr& P, const Tangle& t,
                             const Scalar& coeff);
  static AlgElem from_tangle(const ParamPtr& P, const Tangle& t);
  static AlgElem identity(const ParamPtr& P, int n);
  static AlgElem zero(const ParamPtr& P, int top, int bottom);
  static AlgElem gen(const ParamPtr& P, GenKind kind, int n, int i = 0);

  const ParamPtr& param() const { return P_; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }
  const std::map<Tangle, Scalar>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // coefficient of a tangle (zero scalar if absent)
  Scalar coeff(const Tangle& t) const;
  void add_term(const Tangle& t, const Scalar& c);

  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem operator-() const;
  AlgElem operator*(const Scalar& s) const;
  // diagram product with D^loops; shapes (a,b)*(b,c) -> (a,c)
  AlgElem operator*(const AlgElem& o) const;
  bool operator==(const AlgElem& o) const;

  // adjoint diagram on every term, coefficients conjugated (identity: the
  // coefficient fields are real)
  AlgElem star() const;

  // normalized Markov trace, tr(1_n) = 1
  Scalar trace() const;

  // conditional expectation M_n -> M_{n-1}: close the rightmost column with
  // an overall factor 1/D
  AlgElem cond_expect() const;

  // extend by t through strings on the right: M(m,n) -> M(m+t, n+t)
  AlgElem extend(int t) const;

  // side-by-side juxtaposition
  AlgElem juxtapose(const AlgElem& right) const;

  // lift coefficients into an extended field
  AlgElem lift_to(const ParamPtr& Q) const;

  std::string str() const;
  std::string json() const;

 private:
  ParamPtr P_;
  int top_, bottom_;
  std::map<Tangle, Scalar> terms_;
};

// <x,y> = tr(y* x): the GNS form for m = n and the odd-space inner product
// for m + n odd (the slice with the larger point count on the bottom, i.e.
// normalization D^{-max(m,n)}).
Scalar pairing(const AlgElem& x, const AlgElem& y);

// Word parser over {id, e_i, l_i, r_i, p_i, g_k}, rational scalars, + - *,
// parentheses.  g_k is expanded through the idempotent tower.
AlgElem parse_word(const std::string& word, int n, const ParamPtr& P);

}  // namespace motzkin
