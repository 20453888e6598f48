#include "motzkin/gram.hpp"

#include <algorithm>
#include <sstream>

#include "motzkin/errors.hpp"

namespace motzkin {

GramForm gram(int m, int n, const ParamPtr& P, int bound) {
  GramForm g;
  g.P = P;
  g.m = m;
  g.n = n;
  g.basis = enumerate_tangles(m, n, bound);
  const int N = g.side();
  const int pts = m + n;
  const int norm = std::max(m, n);

  // pairing(x, y) = D^{loops(x against y) - max(m,n)}
  std::vector<Scalar> dpow(pts + 1, Scalar::one(P->F));
  for (int i = 1; i <= pts; ++i) dpow[i] = dpow[i - 1] * P->D;
  Scalar dnorm = P->D.pow(-static_cast<long>(norm));

  std::vector<std::pair<int, int>> idents(pts);
  g.mat.assign(N, std::vector<Scalar>());
  for (int i = 0; i < N; ++i) g.mat[i].assign(N, Scalar::zero(P->F));
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      for (int k = 0; k < pts; ++k) idents[k] = {k, pts + k};
      int loops = contract(g.basis[i], &g.basis[j], idents, {}, {}).loops;
      Scalar v = dpow[loops] * dnorm;
      g.mat[i][j] = v;
      if (j != i) g.mat[j][i] = std::move(v);
    }
  }
  return g;
}

namespace {

// Exact-division Gaussian elimination.  On these Gram matrices the
// Schur-complement entries are ratios of structured minors and stay small,
// where a fraction-free (Bareiss) elimination accumulates the minors
// themselves, whose magnitude grows exponentially with elimination depth.
// The inner loops run on raw mpq_t with a reused temporary.

int gauss_rank_rat(std::vector<std::vector<Rat>>& M) {
  const int rows = static_cast<int>(M.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(M[0].size());
  int r = 0;
  Rat t;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap(M[piv], M[r]);
    {
      Rat pinv = 1 / M[r][col];
      for (int j = col; j < cols; ++j) M[r][j] *= pinv;
    }
    for (int i = r + 1; i < rows; ++i) {
      if (M[i][col] == 0) continue;
      Rat f = std::move(M[i][col]);
      M[i][col] = 0;
      auto* mrow = M[r].data();
      auto* irow = M[i].data();
      for (int j = col + 1; j < cols; ++j) {
        if (sgn(mrow[j]) == 0) continue;
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), mrow[j].get_mpq_t());
        mpq_sub(irow[j].get_mpq_t(), irow[j].get_mpq_t(), t.get_mpq_t());
      }
    }
    ++r;
  }
  return r;
}

// entries a + b c over a quadratic cyclotomic layer with c^2 = m1 c + m0
int gauss_rank_cyclo2(std::vector<std::vector<Rat>>& A,
                      std::vector<std::vector<Rat>>& B, const Rat& m1,
                      const Rat& m0) {
  const int rows = static_cast<int>(A.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(A[0].size());
  const bool has_m1 = m1 != 0;
  int r = 0;
  Rat t, u, p0, p1;
  auto is_zero = [&](int i, int j) { return sgn(A[i][j]) == 0 && sgn(B[i][j]) == 0; };
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(A[piv], A[r]);
      std::swap(B[piv], B[r]);
    }
    {
      // (a + b c)^{-1} = ((a + m1 b) - b c) / (a^2 + m1 a b - m0 b^2)
      const Rat a = A[r][col], b = B[r][col];
      Rat norm = a * a + m1 * a * b - m0 * b * b;
      Rat na = (a + m1 * b) / norm, nb = -b / norm;
      for (int j = col; j < cols; ++j) {
        if (is_zero(r, j)) continue;
        Rat x = A[r][j], y = B[r][j];
        A[r][j] = na * x + m0 * (nb * y);
        B[r][j] = na * y + nb * x + m1 * (nb * y);
      }
    }
    for (int i = r + 1; i < rows; ++i) {
      if (is_zero(i, col)) continue;
      Rat fa = std::move(A[i][col]), fb = std::move(B[i][col]);
      A[i][col] = 0;
      B[i][col] = 0;
      const bool fb_zero = sgn(fb) == 0;
      auto *ra = A[r].data(), *rb = B[r].data();
      auto *ia = A[i].data(), *ib = B[i].data();
      for (int j = col + 1; j < cols; ++j) {
        const bool xz = sgn(ra[j]) == 0, yz = sgn(rb[j]) == 0;
        if (xz && yz) continue;
        // (fa + fb c)(x + y c) = fa x + m0 fb y + (fa y + fb x + m1 fb y) c
        mpq_set_ui(p0.get_mpq_t(), 0, 1);
        mpq_set_ui(p1.get_mpq_t(), 0, 1);
        if (!xz) {
          mpq_mul(p0.get_mpq_t(), fa.get_mpq_t(), ra[j].get_mpq_t());
          if (!fb_zero) {
            mpq_mul(p1.get_mpq_t(), fb.get_mpq_t(), ra[j].get_mpq_t());
          }
        }
        if (!yz) {
          mpq_mul(t.get_mpq_t(), fa.get_mpq_t(), rb[j].get_mpq_t());
          mpq_add(p1.get_mpq_t(), p1.get_mpq_t(), t.get_mpq_t());
          if (!fb_zero) {
            mpq_mul(t.get_mpq_t(), fb.get_mpq_t(), rb[j].get_mpq_t());
            mpq_mul(u.get_mpq_t(), t.get_mpq_t(), m0.get_mpq_t());
            mpq_add(p0.get_mpq_t(), p0.get_mpq_t(), u.get_mpq_t());
            if (has_m1) {
              mpq_mul(u.get_mpq_t(), t.get_mpq_t(), m1.get_mpq_t());
              mpq_add(p1.get_mpq_t(), p1.get_mpq_t(), u.get_mpq_t());
            }
          }
        }
        mpq_sub(ia[j].get_mpq_t(), ia[j].get_mpq_t(), p0.get_mpq_t());
        mpq_sub(ib[j].get_mpq_t(), ib[j].get_mpq_t(), p1.get_mpq_t());
      }
    }
    ++r;
  }
  return r;
}

int gauss_rank_scalar(std::vector<std::vector<Scalar>>& M) {
  const int rows = static_cast<int>(M.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(M[0].size());
  const FieldPtr F = M[0][0].field();
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!M[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap(M[piv], M[r]);
    {
      Scalar pinv = M[r][col].inverse();
      for (int j = col; j < cols; ++j) M[r][j] *= pinv;
    }
    for (int i = r + 1; i < rows; ++i) {
      if (M[i][col].is_zero()) continue;
      Scalar f = M[i][col];
      M[i][col] = Scalar::zero(F);
      for (int j = col + 1; j < cols; ++j) {
        if (!M[r][j].is_zero()) M[i][j] -= f * M[r][j];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

int matrix_rank(std::vector<std::vector<Scalar>> M) {
  if (M.empty()) return 0;
  const FieldPtr F = M[0][0].field();
  if (F->cyclo_degree() == 1 && !F->has_sqrt()) {
    std::vector<std::vector<Rat>> R(M.size());
    for (size_t i = 0; i < M.size(); ++i) {
      R[i].reserve(M[i].size());
      for (const auto& s : M[i]) R[i].push_back(s.coeffs()[0]);
    }
    return gauss_rank_rat(R);
  }
  if (F->cyclo_degree() == 2 && !F->has_sqrt()) {
    const size_t n = M.size();
    std::vector<std::vector<Rat>> A(n), B(n);
    for (size_t i = 0; i < n; ++i) {
      A[i].reserve(M[i].size());
      B[i].reserve(M[i].size());
      for (const auto& s : M[i]) {
        A[i].push_back(s.coeffs()[0]);
        B[i].push_back(s.coeffs()[1]);
      }
    }
    return gauss_rank_cyclo2(A, B, -F->modulus()[1], -F->modulus()[0]);
  }
  return gauss_rank_scalar(M);
}

int gram_rank(const GramForm& g) {
  const int N = g.side();
  if (N == 0) return 0;
  // Deterministic preorder by ascending through-rank, then canonical index.
  // Eliminating along the rank filtration keeps the Schur-complement
  // entries small (they stay near the structured minor ratios); the rank
  // itself is order-independent.
  std::vector<int> order(N);
  for (int i = 0; i < N; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.basis[a].rank() < g.basis[b].rank();
  });
  std::vector<std::vector<Scalar>> M(N);
  for (int i = 0; i < N; ++i) {
    M[i].reserve(N);
    for (int j = 0; j < N; ++j) M[i].push_back(g.mat[order[i]][order[j]]);
  }
  return matrix_rank(std::move(M));
}

bool radical_contains(const AlgElem& x, const GramForm& g) {
  if (x.top() != g.m || x.bottom() != g.n)
    throw ShapeMismatch("radical_contains: shape differs from Gram basis");
  if (x.is_zero()) return true;
  const bool lift = !x.param()->F->same(*g.P->F);
  const FieldPtr F = x.param()->F;
  const int N = g.side();
  std::vector<Scalar> v(N, Scalar::zero(F));
  {
    std::map<Tangle, int> index;
    for (int i = 0; i < N; ++i) index.emplace(g.basis[i], i);
    for (const auto& [t, c] : x.terms()) {
      auto it = index.find(t);
      if (it == index.end())
        throw MotzkinError("radical_contains: term outside Gram basis");
      v[it->second] = c;
    }
  }
  for (int i = 0; i < N; ++i) {
    Scalar acc = Scalar::zero(F);
    for (int j = 0; j < N; ++j) {
      if (v[j].is_zero()) continue;
      Scalar e = lift ? g.mat[i][j].lift_to(F) : g.mat[i][j];
      acc += e * v[j];
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool gram_psd(const GramForm& g) {
  const int N = g.side();
  if (N == 0) return true;
  // positive scaling by D^{max(m,n)} preserves semidefiniteness
  Scalar scale = g.P->D.pow(std::max(g.m, g.n));
  std::vector<std::vector<Scalar>> M(N);
  for (int i = 0; i < N; ++i) {
    M[i].reserve(N);
    for (int j = 0; j < N; ++j) M[i].push_back(g.mat[i][j] * scale);
  }
  return matrix_psd(std::move(M));
}

bool matrix_psd(std::vector<std::vector<Scalar>> M) {
  const int N = static_cast<int>(M.size());
  if (N == 0) return true;
  std::vector<bool> used(N, false);
  for (;;) {
    int piv = -1;
    for (int i = 0; i < N; ++i)
      if (!used[i] && !M[i][i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // remaining block must be identically zero
      for (int i = 0; i < N; ++i) {
        if (used[i]) continue;
        for (int j = 0; j < N; ++j)
          if (!used[j] && !M[i][j].is_zero()) return false;
      }
      return true;
    }
    if (M[piv][piv].sign() < 0) return false;
    used[piv] = true;
    Scalar pinv = M[piv][piv].inverse();
    for (int i = 0; i < N; ++i) {
      if (used[i] || M[i][piv].is_zero()) continue;
      Scalar f = M[i][piv] * pinv;
      for (int j = 0; j < N; ++j) {
        if (used[j]) continue;
        M[i][j] -= f * M[piv][j];
      }
    }
  }
}

std::string GramForm::json() const {
  std::ostringstream os;
  os << "{\"shape\":[" << m << "," << n << "],\"D\":\"" << P->param.str()
     << "\",\"basis\":[";
  for (int i = 0; i < side(); ++i) {
    if (i) os << ",";
    os << "\"" << basis[i].compact() << "\"";
  }
  os << "],\"matrix\":[";
  for (int i = 0; i < side(); ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < side(); ++j) {
      if (j) os << ",";
      os << mat[i][j].json();
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace motzkin
