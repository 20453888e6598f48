#pragma once

#include <memory>
#include <string>

#include "motzkin/field.hpp"

namespace motzkin {

// The loop parameter D: either an exact rational != 1, or D = 1 + 2cos(pi/nu).
class LoopParam {
 public:
  enum class Kind { Rational, RootOfUnity };

  static LoopParam rational(const Rat& value);
  static LoopParam root_of_unity(int nu);
  // "4", "7/2", "cos:5"
  static LoopParam parse(const std::string& spec);

  Kind kind() const { return kind_; }
  const Rat& value() const { return value_; }  // Rational only
  int nu() const { return nu_; }               // RootOfUnity only

  // Whether D lies in the positive-trace regime {1+2cos(pi/n)} u [3,inf).
  bool positive_regime() const;

  std::string str() const;
  bool operator==(const LoopParam& o) const {
    return kind_ == o.kind_ && value_ == o.value_ && nu_ == o.nu_;
  }

 private:
  Kind kind_ = Kind::Rational;
  Rat value_{4};
  int nu_ = 0;
};

// A LoopParam together with its coefficient field and the derived constants.
// Everything downstream (AlgElem, Gram forms, towers) shares one of these.
struct ParamContext {
  LoopParam param;
  FieldPtr F;
  Scalar D, d, tau;  // tau = 1/d^2, so tau * d^2 = 1 exactly

  static std::shared_ptr<const ParamContext> make(const LoopParam& p);
  // Same parameter in F(sqrt(radicand)); radicand given in the current field.
  std::shared_ptr<const ParamContext> extend_sqrt(const Scalar& radicand) const;

  Scalar scalar(const Rat& r) const { return Scalar::of(F, r); }
  Scalar D_pow(long e) const { return D.pow(e); }
};

using ParamPtr = std::shared_ptr<const ParamContext>;

// Chebyshev sequence P_0 = P_1 = 1, P_{k+1} = P_k - x P_{k-1}, evaluated
// exactly in the field of x.
Scalar chebyshev(int k, const Scalar& x);

// true iff P_k(tau) != 0 for all 1 <= k <= n
bool is_generic(const ParamPtr& P, int n);

// lambda_k = (D/d) P_{k-1}(tau) / P_k(tau); GenericityViolation when
// P_k(tau) = 0 (g_{k+1} cannot be built).
Scalar lambda(const ParamPtr& P, int k);

}  // namespace motzkin
