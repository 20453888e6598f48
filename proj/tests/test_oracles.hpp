#pragma once

// Independent oracles used by the tests.  These deliberately avoid the
// library's contraction kernel and dimension routines so that expected
// values come from a second, unrelated computation path.

#include <map>
#include <vector>

#include "motzkin/polynomial.hpp"
#include "motzkin/rational.hpp"
#include "motzkin/tangle.hpp"

namespace motzkin::oracle {

// loops in the full point-to-point contraction of x against y, by explicit
// adjacency walking (path endpoints never contribute)
inline int pair_loops(const Tangle& x, const Tangle& y) {
  const int n = x.points();
  // vertices 0..n-1 for x, n..2n-1 for y; edges: internal pairings plus the
  // mirror identification i ~ n+i
  std::map<int, std::vector<int>> adj;
  for (int i = 0; i < n; ++i) {
    if (x.partner(i) >= 0) adj[i].push_back(x.partner(i));
    if (y.partner(i) >= 0) adj[n + i].push_back(n + y.partner(i));
    adj[i].push_back(n + i);
    adj[n + i].push_back(i);
  }
  std::vector<bool> seen(2 * n, false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    // walk the component; count vertices with degree 1 (path ends)
    std::vector<int> stack{start};
    seen[start] = true;
    int ends = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (adj[v].size() == 1) ++ends;
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    if (ends == 0) ++loops;
  }
  return loops;
}

// <x,y> = D^{loops - max(m,n)} for single diagrams, rational D
inline Rat pairing_rat(const Tangle& x, const Tangle& y, const Rat& D) {
  long e = pair_loops(x, y) - std::max(x.top(), x.bottom());
  return rat_pow(D, e);
}

// Motzkin numbers by the convolution recursion alone
inline std::vector<Int> motzkin_convolution(int upto) {
  std::vector<Int> m(upto + 1);
  for (int k = 0; k <= upto; ++k) {
    if (k == 0) {
      m[k] = 1;
      continue;
    }
    m[k] = m[k - 1];
    for (int i = 1; i < k; ++i) m[k] += m[i - 1] * m[k - i - 1];
  }
  return m;
}

// resultant of two rational polynomials by the Euclidean algorithm
inline Rat resultant(QPoly f, QPoly g) {
  if (f.is_zero() || g.is_zero()) return Rat(0);
  Rat acc(1);
  bool flip = false;
  while (g.degree() > 0) {
    QPoly r = f.divmod(g).second;
    if ((f.degree() % 2) && (g.degree() % 2)) flip = !flip;
    int dr = r.is_zero() ? -1 : r.degree();
    acc *= rat_pow(g.leading(), f.degree() - (dr < 0 ? 0 : dr));
    if (r.is_zero()) return Rat(0);
    f = g;
    g = r;
  }
  acc *= rat_pow(g[0], f.degree());
  return flip ? -acc : acc;
}

// Res_z(f(z), z^2 - x z + 1) as a polynomial in x, by evaluation at
// deg(f)+1 rational points and Lagrange interpolation
inline QPoly resultant_z_quadratic(const QPoly& f) {
  const int deg = f.degree();
  std::vector<Rat> xs, ys;
  for (int t = 0; t <= deg; ++t) {
    Rat x(t);
    QPoly g({Rat(1), -x, Rat(1)});
    xs.push_back(x);
    ys.push_back(resultant(f, g));
  }
  // Lagrange interpolation
  QPoly acc;
  for (int i = 0; i <= deg; ++i) {
    QPoly term = QPoly::constant(ys[i]);
    for (int j = 0; j <= deg; ++j) {
      if (j == i) continue;
      term = term * QPoly({-xs[j], Rat(1)}) * (Rat(1) / (xs[i] - xs[j]));
    }
    acc = acc + term;
  }
  return acc;
}

// Dickson/Chebyshev-style E_j with E_j(2 cos t) = 2 cos(j t)
inline QPoly dickson(int j) {
  QPoly prev = QPoly::constant(Rat(2)), cur = QPoly::x();
  if (j == 0) return prev;
  for (int i = 1; i < j; ++i) {
    QPoly next = QPoly::x() * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// <Q_nu^k xi, xi> by direct dense integer powering (independent of the
// towers module's implementation)
inline Int q_power_entry(int nu, int k) {
  const int n = nu - 1;
  std::vector<std::vector<Int>> q(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(i - j) <= 1) q[i][j] = 1;
  std::vector<std::vector<Int>> acc(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) acc[i][i] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<Int>> next(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) {
        if (acc[i][t] == 0) continue;
        for (int j = 0; j < n; ++j) next[i][j] += acc[i][t] * q[t][j];
      }
    acc = std::move(next);
  }
  return acc[0][0];
}

}  // namespace motzkin::oracle
