#pragma once

#include <gmpxx.h>

#include <string>

#include "motzkin/errors.hpp"

namespace motzkin {

// All coefficient arithmetic is exact.  Rat is GMP's canonicalized rational.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = e > 0 ? e : -e;
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Int binom(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

// Accepts "a" or "a/b" with optional sign.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && c == '-');
    if (!ok) throw ParseError("bad rational literal: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  r.canonicalize();
  if (s.find('/') != std::string::npos && r.get_den() == 0)
    throw ParseError("zero denominator: " + s);
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace motzkin
