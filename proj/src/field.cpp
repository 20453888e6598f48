#include "motzkin/field.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

#include "motzkin/errors.hpp"

namespace motzkin {

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

QPoly cyclotomic_poly(unsigned long n) {
  // divide x^d - 1 out of x^n - 1 for every proper divisor d
  auto x_pow_minus_1 = [](unsigned long k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[0] = Rat(-1);
    c[k] = Rat(1);
    return QPoly(std::move(c));
  };
  QPoly p = x_pow_minus_1(n);
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    QPoly phi_d = cyclotomic_poly(d);
    auto [q, r] = p.divmod(phi_d);
    assert(r.is_zero());
    p = q;
  }
  return p;
}

QPoly cos_minimal_poly(int nu) {
  if (nu < 3) throw DomainError("cos_minimal_poly: nu must be >= 3");
  QPoly phi = cyclotomic_poly(2ul * nu);
  int m = phi.degree() / 2;
  // V_j(z + 1/z) = z^j + z^{-j}
  QPoly v_prev = QPoly::constant(Rat(2));  // V_0
  QPoly v_cur = QPoly::x();                // V_1
  QPoly mu = QPoly::constant(phi[m]);
  for (int j = 1; j <= m; ++j) {
    if (j >= 2) {
      QPoly v_next = QPoly::x() * v_cur - v_prev;
      v_prev = v_cur;
      v_cur = v_next;
    }
    mu = mu + v_cur * phi[m - j];
  }
  assert(mu.degree() == m);
  assert(mu.leading() == 1);
  assert(static_cast<unsigned long>(m) == euler_phi(2ul * nu) / 2);
  return mu;
}

bool try_rational_sqrt(const Rat& r, Rat& out) {
  if (sgn(r) < 0) return false;
  if (sgn(r) == 0) {
    out = 0;
    return true;
  }
  Int num = r.get_num(), den = r.get_den();
  Int sn, sd;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = Rat(sn, sd);
  return true;
}

namespace {

// Isolating interval for the largest real root of mu (monic, squarefree,
// all roots in (-2, 2)).
void isolate_largest_root(const QPoly& mu, RatInterval& iso, bool& exact) {
  if (mu.degree() == 1) {
    Rat root = -mu[0] / mu[1];
    iso = {root, root};
    exact = true;
    return;
  }
  exact = false;
  auto chain = sturm_chain(mu);
  Rat a(-3), b(3);
  // An irreducible mu of degree >= 2 has no rational roots, so counts at
  // rational endpoints are always well-defined.
  while (sturm_count(chain, a, b) > 1) {
    Rat m = (a + b) / 2;
    if (sturm_count(chain, m, b) >= 1)
      a = m;
    else
      b = m;
  }
  iso = {a, b};
}

std::vector<Rat> poly_mul_mod(const std::vector<Rat>& a,
                              const std::vector<Rat>& b, const QPoly& mu,
                              int m) {
  if (m == 1) return {a[0] * b[0]};
  std::vector<Rat> prod(2 * m - 1, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  // reduce mod monic mu
  for (int k = 2 * m - 2; k >= m; --k) {
    if (prod[k] == 0) continue;
    Rat f = prod[k];
    prod[k] = 0;
    for (int i = 0; i < m; ++i) prod[k - m + i] -= f * mu[i];
  }
  prod.resize(m);
  return prod;
}

// inverse of a nonzero residue mod mu by extended Euclid over Q[x]
std::vector<Rat> poly_inv_mod(const std::vector<Rat>& a, const QPoly& mu,
                              int m) {
  if (m == 1) {
    if (a[0] == 0) throw DomainError("division by zero");
    return {Rat(1) / a[0]};
  }
  QPoly r0 = mu, r1 = QPoly(std::vector<Rat>(a.begin(), a.end()));
  QPoly s0, s1 = QPoly::constant(Rat(1));
  if (r1.is_zero()) throw DomainError("division by zero");
  while (r1.degree() > 0) {
    auto [q, r] = r0.divmod(r1);
    QPoly s = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
    if (r1.is_zero()) throw DomainError("not invertible (reducible modulus?)");
  }
  QPoly inv = s1 * (Rat(1) / r1[0]);
  std::vector<Rat> out(m, Rat(0));
  for (int i = 0; i <= inv.degree(); ++i) out[i] = inv[i];
  return out;
}

}  // namespace

std::shared_ptr<const FieldContext> FieldContext::rationals() {
  static std::shared_ptr<const FieldContext> q = [] {
    auto f = std::shared_ptr<FieldContext>(new FieldContext());
    f->nu_ = 0;
    f->cyclo_deg_ = 1;
    return std::shared_ptr<const FieldContext>(f);
  }();
  return q;
}

std::shared_ptr<const FieldContext> FieldContext::real_cyclotomic(int nu) {
  if (nu < 3) throw DomainError("real_cyclotomic: nu must be >= 3");
  auto f = std::shared_ptr<FieldContext>(new FieldContext());
  f->nu_ = nu;
  f->mu_ = cos_minimal_poly(nu);
  f->cyclo_deg_ = f->mu_.degree();
  isolate_largest_root(f->mu_, f->iso_, f->iso_exact_);
  return f;
}

std::shared_ptr<const FieldContext> FieldContext::with_sqrt(
    const std::shared_ptr<const FieldContext>& base, std::vector<Rat> radicand) {
  if (base->has_sqrt())
    throw DomainError("with_sqrt: nested sqrt layers not supported");
  if (static_cast<int>(radicand.size()) != base->cyclo_degree())
    throw DomainError("with_sqrt: radicand size mismatch");
  auto f = std::shared_ptr<FieldContext>(new FieldContext());
  f->nu_ = base->nu_;
  f->mu_ = base->mu_;
  f->cyclo_deg_ = base->cyclo_deg_;
  f->iso_ = base->iso_;
  f->iso_exact_ = base->iso_exact_;
  f->rad_ = std::move(radicand);
  return f;
}

RatInterval FieldContext::generator_enclosure(const Rat& w) const {
  RatInterval iv = iso_;
  if (iso_exact_) return iv;
  while (iv.hi - iv.lo > w) {
    Rat m = (iv.lo + iv.hi) / 2;
    if (sgn(mu_.eval(m)) > 0)
      iv.hi = m;
    else
      iv.lo = m;
  }
  return iv;
}

Scalar Scalar::of(const FieldPtr& F, const Rat& r) {
  std::vector<Rat> c(F->degree(), Rat(0));
  c[0] = r;
  return Scalar(F, std::move(c));
}

Scalar Scalar::from_coeffs(const FieldPtr& F, std::vector<Rat> coeffs) {
  if (static_cast<int>(coeffs.size()) != F->degree())
    throw DomainError("Scalar::from_coeffs: size mismatch");
  return Scalar(F, std::move(coeffs));
}

Scalar Scalar::generator(const FieldPtr& F) {
  if (F->nu() == 0) throw DomainError("generator: no cyclotomic layer");
  std::vector<Rat> c(F->degree(), Rat(0));
  if (F->cyclo_degree() == 1) {
    // nu = 3: c = 1 exactly
    c[0] = -F->modulus()[0];
  } else {
    c[1] = 1;
  }
  return Scalar(F, std::move(c));
}

Scalar Scalar::sqrt_generator(const FieldPtr& F) {
  if (!F->has_sqrt()) throw DomainError("sqrt_generator: no sqrt layer");
  std::vector<Rat> c(F->degree(), Rat(0));
  c[F->cyclo_degree()] = 1;
  return Scalar(F, std::move(c));
}

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Scalar::rational_value() const {
  if (!is_rational()) throw DomainError("scalar is not rational");
  return c_[0];
}

Scalar Scalar::operator+(const Scalar& o) const {
  assert(F_->same(*o.F_));
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return Scalar(F_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const {
  assert(F_->same(*o.F_));
  std::vector<Rat> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return Scalar(F_, std::move(c));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar Scalar::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& x : c) x = -x;
  return Scalar(F_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& o) const {
  assert(F_->same(*o.F_));
  const int m = F_->cyclo_degree();
  if (!F_->has_sqrt()) {
    if (m == 1) {
      std::vector<Rat> c{c_[0] * o.c_[0]};
      return Scalar(F_, std::move(c));
    }
    return Scalar(F_, poly_mul_mod(c_, o.c_, F_->modulus(), m));
  }
  // (A0 + A1 y)(B0 + B1 y) = (A0 B0 + A1 B1 rad) + (A0 B1 + A1 B0) y
  auto slice = [m](const std::vector<Rat>& v, int j) {
    return std::vector<Rat>(v.begin() + j * m, v.begin() + (j + 1) * m);
  };
  std::vector<Rat> a0 = slice(c_, 0), a1 = slice(c_, 1);
  std::vector<Rat> b0 = slice(o.c_, 0), b1 = slice(o.c_, 1);
  const QPoly& mu = F_->modulus();
  std::vector<Rat> r0 = poly_mul_mod(a0, b0, mu, m);
  std::vector<Rat> cross = poly_mul_mod(poly_mul_mod(a1, b1, mu, m),
                                        F_->radicand(), mu, m);
  for (int i = 0; i < m; ++i) r0[i] += cross[i];
  std::vector<Rat> r1 = poly_mul_mod(a0, b1, mu, m);
  std::vector<Rat> r1b = poly_mul_mod(a1, b0, mu, m);
  for (int i = 0; i < m; ++i) r1[i] += r1b[i];
  std::vector<Rat> out(2 * m);
  for (int i = 0; i < m; ++i) out[i] = std::move(r0[i]);
  for (int i = 0; i < m; ++i) out[m + i] = std::move(r1[i]);
  return Scalar(F_, std::move(out));
}

Scalar Scalar::inverse() const {
  const int m = F_->cyclo_degree();
  if (!F_->has_sqrt()) {
    if (is_zero()) throw DomainError("division by zero");
    return Scalar(F_, poly_inv_mod(c_, F_->modulus(), m));
  }
  // (A + B y)^{-1} = (A - B y) / (A^2 - B^2 rad); rad is a non-square in the
  // base, so the norm vanishes only at zero.
  auto slice = [this, m](int j) {
    return std::vector<Rat>(c_.begin() + j * m, c_.begin() + (j + 1) * m);
  };
  std::vector<Rat> a = slice(0), b = slice(1);
  const QPoly& mu = F_->modulus();
  std::vector<Rat> norm = poly_mul_mod(a, a, mu, m);
  std::vector<Rat> b2r =
      poly_mul_mod(poly_mul_mod(b, b, mu, m), F_->radicand(), mu, m);
  for (int i = 0; i < m; ++i) norm[i] -= b2r[i];
  bool all_zero = true;
  for (const auto& x : norm)
    if (x != 0) all_zero = false;
  if (all_zero) throw DomainError("division by zero");
  std::vector<Rat> ninv = poly_inv_mod(norm, mu, m);
  std::vector<Rat> out(2 * m);
  std::vector<Rat> oa = poly_mul_mod(a, ninv, mu, m);
  std::vector<Rat> ob = poly_mul_mod(b, ninv, mu, m);
  for (int i = 0; i < m; ++i) out[i] = std::move(oa[i]);
  for (int i = 0; i < m; ++i) out[m + i] = -ob[i];
  return Scalar(F_, std::move(out));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
  Scalar base = e >= 0 ? *this : inverse();
  unsigned long n = e >= 0 ? e : -e;
  Scalar acc = Scalar::one(F_);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

int Scalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  const int m = F_->cyclo_degree();
  auto slice = [this, m](int j) {
    std::vector<Rat> v(c_.begin() + j * m, c_.begin() + (j + 1) * m);
    return QPoly(std::move(v));
  };
  QPoly a = slice(0);
  QPoly b = F_->has_sqrt() ? slice(1) : QPoly();
  QPoly radp = F_->has_sqrt()
                   ? QPoly(std::vector<Rat>(F_->radicand()))
                   : QPoly();
  Rat w(1, 16);
  for (int iter = 0; iter < 4096; ++iter) {
    RatInterval c = F_->generator_enclosure(w);
    RatInterval val = interval_eval(a, c);
    if (F_->has_sqrt()) {
      RatInterval r = interval_eval(radp, c);
      RatInterval y = sqrt_enclosure(r, w);
      val = val + interval_eval(b, c) * y;
    }
    if (!val.contains_zero()) return sgn(val.lo) > 0 ? 1 : -1;
    w /= 16;
  }
  throw DomainError("sign: interval refinement failed to converge");
}

Scalar Scalar::lift_to(const FieldPtr& G) const {
  if (F_->same(*G)) return Scalar(G, c_);
  std::vector<Rat> c(G->degree(), Rat(0));
  if (F_->is_rationals()) {
    c[0] = c_[0];
    return Scalar(G, std::move(c));
  }
  if (!F_->has_sqrt() && G->has_sqrt() && F_->nu() == G->nu()) {
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    return Scalar(G, std::move(c));
  }
  throw DomainError("lift_to: unsupported embedding");
}

double Scalar::to_double() const {
  const int m = F_->cyclo_degree();
  double c = 0.0;
  if (F_->nu() > 0) {
    Rat w = Rat(1) / (Int(1) << 56);
    RatInterval iv = F_->generator_enclosure(w);
    Rat mid = (iv.lo + iv.hi) / 2;
    c = mid.get_d();
  }
  double acc0 = 0, acc1 = 0, cp = 1;
  for (int i = 0; i < m; ++i) {
    acc0 += c_[i].get_d() * cp;
    if (F_->has_sqrt()) acc1 += c_[m + i].get_d() * cp;
    cp *= c;
  }
  if (!F_->has_sqrt()) return acc0;
  double rad = 0;
  cp = 1;
  for (int i = 0; i < m; ++i) {
    rad += F_->radicand()[i].get_d() * cp;
    cp *= c;
  }
  return acc0 + acc1 * std::sqrt(rad);
}

std::string Scalar::str() const {
  if (is_rational()) return rat_str(c_[0]);
  const int m = F_->cyclo_degree();
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rat& v, int i, int j) {
    if (v == 0) return;
    if (!first) os << (sgn(v) > 0 ? " + " : " - ");
    else if (sgn(v) < 0) os << "-";
    first = false;
    Rat av = abs(v);
    bool unit = (av == 1) && (i > 0 || j > 0);
    if (!unit) os << rat_str(av);
    if (i > 0) {
      if (!unit) os << "*";
      os << "c";
      if (i > 1) os << "^" << i;
      unit = false;
    }
    if (j > 0) {
      if (!unit) os << "*";
      os << "y";
    }
  };
  for (int j = 0; j < (F_->has_sqrt() ? 2 : 1); ++j)
    for (int i = 0; i < m; ++i) emit(c_[j * m + i], i, j);
  if (first) os << "0";
  return os.str();
}

std::string Scalar::json() const {
  std::ostringstream os;
  if (F_->is_rationals() || (is_rational() && !F_->has_sqrt() && F_->nu() == 0)) {
    os << "{\"num\":" << c_[0].get_num().get_str()
       << ",\"den\":" << c_[0].get_den().get_str() << "}";
    return os.str();
  }
  auto rat_json = [](const Rat& r) {
    return "{\"num\":" + r.get_num().get_str() + ",\"den\":" +
           r.get_den().get_str() + "}";
  };
  os << "{\"poly\":[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << rat_json(c_[i]);
  }
  os << "],\"nu\":" << F_->nu();
  if (F_->has_sqrt()) {
    os << ",\"rad\":[";
    for (size_t i = 0; i < F_->radicand().size(); ++i) {
      if (i) os << ",";
      os << rat_json(F_->radicand()[i]);
    }
    os << "]";
  }
  os << "}";
  return os.str();
}

}  // namespace motzkin
