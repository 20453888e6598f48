#pragma once

#include <memory>
#include <string>
#include <vector>

#include "motzkin/polynomial.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

unsigned long euler_phi(unsigned long n);

// Cyclotomic polynomial Phi_n over Q (integer coefficients).
QPoly cyclotomic_poly(unsigned long n);

// Minimal polynomial of 2cos(pi/nu) over Q, monic of degree phi(2 nu)/2.
// Extracted from Phi_{2 nu}(z) = z^m mu(z + 1/z) by matching coefficients
// against the basis V_j with V_j(z + 1/z) = z^j + z^{-j}.
QPoly cos_minimal_poly(int nu);

// If r = (p/q)^2 for a rational p/q, returns true and stores p/q (>= 0).
bool try_rational_sqrt(const Rat& r, Rat& out);

// A coefficient field for Motzkin computations.  Three shapes are used:
//   - Q                                  (nu == 0, no sqrt layer)
//   - Q(2cos(pi/nu))                     (nu >= 3, no sqrt layer)
//   - base(sqrt(rad)), rad in the base   (sqrt layer over either of the above)
// Elements are stored as coefficient vectors in the basis c^i y^j with
// c = 2cos(pi/nu), y = sqrt(rad), 0 <= i < cyclo_degree, 0 <= j < 2.
class FieldContext {
 public:
  static std::shared_ptr<const FieldContext> rationals();
  static std::shared_ptr<const FieldContext> real_cyclotomic(int nu);
  // radicand in the base field of `base` (which must not itself have a sqrt
  // layer); the distinguished real embedding of the radicand must be positive.
  static std::shared_ptr<const FieldContext> with_sqrt(
      const std::shared_ptr<const FieldContext>& base, std::vector<Rat> radicand);

  int nu() const { return nu_; }
  const QPoly& modulus() const { return mu_; }
  int cyclo_degree() const { return cyclo_deg_; }
  bool has_sqrt() const { return !rad_.empty(); }
  const std::vector<Rat>& radicand() const { return rad_; }
  int degree() const { return cyclo_deg_ * (has_sqrt() ? 2 : 1); }
  bool is_rationals() const { return nu_ == 0 && !has_sqrt(); }

  bool same(const FieldContext& o) const {
    return nu_ == o.nu_ && rad_ == o.rad_;
  }

  // Enclosure of c = 2cos(pi/nu) (the largest real root of the modulus),
  // refined by bisection to width <= w.  Exact for nu = 3.
  RatInterval generator_enclosure(const Rat& w) const;

 private:
  FieldContext() = default;
  int nu_ = 0;
  QPoly mu_;
  int cyclo_deg_ = 1;
  std::vector<Rat> rad_;
  // initial isolating interval for the largest root of mu_
  RatInterval iso_{Rat(0), Rat(0)};
  bool iso_exact_ = true;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

// An exact element of a FieldContext.  Immutable value semantics; all
// arithmetic is exact and equality is decidable.
class Scalar {
 public:
  Scalar() = default;  // invalid until assigned
  static Scalar zero(const FieldPtr& F) { return of(F, Rat(0)); }
  static Scalar one(const FieldPtr& F) { return of(F, Rat(1)); }
  static Scalar of(const FieldPtr& F, const Rat& r);
  static Scalar from_coeffs(const FieldPtr& F, std::vector<Rat> coeffs);
  // c = 2cos(pi/nu); requires a cyclotomic layer
  static Scalar generator(const FieldPtr& F);
  // y = sqrt(radicand); requires a sqrt layer
  static Scalar sqrt_generator(const FieldPtr& F);

  const FieldPtr& field() const { return F_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;   // lies in the prime field
  Rat rational_value() const; // requires is_rational()

  bool operator==(const Scalar& o) const { return c_ == o.c_; }
  bool operator!=(const Scalar& o) const { return c_ != o.c_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  // Sign under the distinguished real embedding (c = 2cos(pi/nu) the largest
  // root, y the positive square root).  Zero is decided by exact equality;
  // otherwise adaptive interval refinement, which terminates because a
  // nonzero field element has nonzero embedding.
  int sign() const;

  // Embed into a larger context (Q -> anything; cyclotomic nu -> sqrt layer
  // over the same nu).
  Scalar lift_to(const FieldPtr& G) const;

  double to_double() const;
  std::string str() const;        // human-readable
  std::string json() const;       // wire serialization

 private:
  Scalar(FieldPtr F, std::vector<Rat> c) : F_(std::move(F)), c_(std::move(c)) {}
  FieldPtr F_;
  std::vector<Rat> c_;
};

}  // namespace motzkin
