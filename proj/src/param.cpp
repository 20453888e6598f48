#include "motzkin/param.hpp"

#include "motzkin/errors.hpp"

namespace motzkin {

LoopParam LoopParam::rational(const Rat& value) {
  if (value == 1)
    throw DomainError("LoopParam: D = 1 has d = 0, tau undefined");
  LoopParam p;
  p.kind_ = Kind::Rational;
  p.value_ = value;
  return p;
}

LoopParam LoopParam::root_of_unity(int nu) {
  if (nu < 3) throw DomainError("LoopParam: cos parameter needs nu >= 3");
  LoopParam p;
  p.kind_ = Kind::RootOfUnity;
  p.nu_ = nu;
  return p;
}

LoopParam LoopParam::parse(const std::string& spec) {
  std::string s = spec;
  if (s.rfind("D=", 0) == 0) s = s.substr(2);
  if (s.rfind("cos:", 0) == 0) {
    int nu = 0;
    try {
      nu = std::stoi(s.substr(4));
    } catch (...) {
      throw ParseError("bad parameter spec: " + spec);
    }
    return root_of_unity(nu);
  }
  return rational(parse_rat(s));
}

bool LoopParam::positive_regime() const {
  if (kind_ == Kind::RootOfUnity) return true;
  return value_ >= 3 || value_ == 2;  // D = 2 is 1 + 2cos(pi/3)
}

std::string LoopParam::str() const {
  if (kind_ == Kind::RootOfUnity) return "cos:" + std::to_string(nu_);
  return rat_str(value_);
}

std::shared_ptr<const ParamContext> ParamContext::make(const LoopParam& p) {
  auto ctx = std::make_shared<ParamContext>();
  ctx->param = p;
  if (p.kind() == LoopParam::Kind::Rational) {
    ctx->F = FieldContext::rationals();
    ctx->D = Scalar::of(ctx->F, p.value());
  } else {
    ctx->F = FieldContext::real_cyclotomic(p.nu());
    ctx->D = Scalar::one(ctx->F) + Scalar::generator(ctx->F);
  }
  ctx->d = ctx->D - Scalar::one(ctx->F);
  ctx->tau = (ctx->d * ctx->d).inverse();
  return ctx;
}

std::shared_ptr<const ParamContext> ParamContext::extend_sqrt(
    const Scalar& radicand) const {
  auto G = FieldContext::with_sqrt(F, radicand.coeffs());
  auto ctx = std::make_shared<ParamContext>();
  ctx->param = param;
  ctx->F = G;
  ctx->D = D.lift_to(G);
  ctx->d = d.lift_to(G);
  ctx->tau = tau.lift_to(G);
  return ctx;
}

Scalar chebyshev(int k, const Scalar& x) {
  if (k < 0) throw IndexOutOfRange("chebyshev: k must be >= 0");
  Scalar prev = Scalar::one(x.field());  // P_0
  if (k == 0) return prev;
  Scalar cur = prev;  // P_1
  for (int i = 1; i < k; ++i) {
    Scalar next = cur - x * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

bool is_generic(const ParamPtr& P, int n) {
  Scalar prev = Scalar::one(P->F), cur = prev;
  for (int k = 1; k <= n; ++k) {
    if (k >= 2) {
      Scalar next = cur - P->tau * prev;
      prev = cur;
      cur = next;
    }
    if (cur.is_zero()) return false;
  }
  return true;
}

Scalar lambda(const ParamPtr& P, int k) {
  if (k < 1) throw IndexOutOfRange("lambda: k must be >= 1");
  Scalar pk = chebyshev(k, P->tau);
  if (pk.is_zero())
    throw GenericityViolation(
        k, "P_" + std::to_string(k) + "(tau) = 0 at D = " + P->param.str());
  return P->D / P->d * chebyshev(k - 1, P->tau) / pk;
}

}  // namespace motzkin
