#pragma once

#include <utility>
#include <vector>

#include "motzkin/rational.hpp"

namespace motzkin {

// Dense univariate polynomial over Q, coefficient 0 is the constant term.
// The zero polynomial is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPoly constant(const Rat& r) {
    return r == 0 ? QPoly() : QPoly(std::vector<Rat>{r});
  }
  static QPoly x() { return QPoly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const Rat& operator[](size_t i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  QPoly operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
  }
  QPoly operator-(const QPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
  }
  QPoly operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
  }
  QPoly operator*(const Rat& s) const {
    if (s == 0) return QPoly();
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
  }
  QPoly operator-() const { return *this * Rat(-1); }

  // Euclidean division; divisor must be nonzero.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
    QPoly q, r = *this;
    std::vector<Rat> qc(
        r.degree() >= d.degree() ? r.degree() - d.degree() + 1 : 0, Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Rat f = r.leading() / d.leading();
      int shift = r.degree() - d.degree();
      qc[shift] = f;
      std::vector<Rat> rc = r.c_;
      for (size_t i = 0; i < d.c_.size(); ++i) rc[i + shift] -= f * d.c_[i];
      rc.pop_back();
      r = QPoly(std::move(rc));
    }
    return {QPoly(std::move(qc)), r};
  }

  QPoly derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(r));
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  QPoly monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Standard Sturm chain: s0 = p, s1 = p', s_{i+1} = -rem(s_{i-1}, s_i).
inline std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> s;
  s.push_back(p);
  s.push_back(p.derivative());
  while (!s.back().is_zero()) {
    QPoly r = s[s.size() - 2].divmod(s.back()).second;
    s.push_back(-r);
  }
  s.pop_back();
  return s;
}

inline int sturm_variations(const std::vector<QPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& q : chain) {
    Rat v = q.eval(x);
    int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Number of distinct real roots in (a, b]; requires p(a) != 0 and p(b) != 0.
inline int sturm_count(const std::vector<QPoly>& chain, const Rat& a,
                       const Rat& b) {
  return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Closed rational interval, lo <= hi.
struct RatInterval {
  Rat lo, hi;
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  RatInterval operator+(const RatInterval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  RatInterval operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rat mn = a, mx = a;
    for (const Rat* v : {&b, &c, &d}) {
      if (*v < mn) mn = *v;
      if (*v > mx) mx = *v;
    }
    return {mn, mx};
  }
  RatInterval operator*(const Rat& s) const {
    if (sgn(s) >= 0) return {lo * s, hi * s};
    return {hi * s, lo * s};
  }
};

inline RatInterval interval_eval(const QPoly& p, const RatInterval& x) {
  RatInterval acc{Rat(0), Rat(0)};
  const auto& c = p.coeffs();
  for (size_t i = c.size(); i-- > 0;) {
    acc = acc * x;
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

// Rational enclosure of sqrt(r) for an enclosure [lo,hi] of a positive value,
// refined by bisection until the width is below `width`.
inline RatInterval sqrt_enclosure(const RatInterval& r, const Rat& width) {
  auto sqrt_below = [](const Rat& v) {
    Rat a(0), b = v < 1 ? Rat(1) : v;
    while (b - a > Rat(1, 1 << 20)) {
      Rat m = (a + b) / 2;
      if (m * m <= v) a = m; else b = m;
    }
    return a;
  };
  Rat a = sqrt_below(r.lo), b = sqrt_below(r.hi) + Rat(1, 1 << 20);
  // tighten until narrow enough
  while (b - a > width) {
    Rat m = (a + b) / 2;
    if (m * m <= r.lo) a = m;
    else if (m * m >= r.hi) b = m;
    else break;  // stuck between the two bounds; enclosure is already valid
  }
  return {a, b};
}

}  // namespace motzkin
