#pragma once

#include <vector>

#include "motzkin/algebra.hpp"

namespace motzkin {

// Exact matrix of pairwise trace-pairings over the canonical tangle basis of
// M(m,n).  mat[i][j] = pairing(basis[i], basis[j]); symmetric, entries are
// powers of D.
struct GramForm {
  ParamPtr P;
  int m = 0, n = 0;
  std::vector<Tangle> basis;
  std::vector<std::vector<Scalar>> mat;

  int side() const { return static_cast<int>(basis.size()); }
  std::string json() const;
};

GramForm gram(int m, int n, const ParamPtr& P, int bound = 18);

// Exact rank by Bareiss-style fraction-free elimination with deterministic
// pivoting (first nonzero row in canonical order, columns left to right).
int gram_rank(const GramForm& g);

// true iff Gram * coefficient-vector = 0 exactly; x may live in an extension
// of g's field.
bool radical_contains(const AlgElem& x, const GramForm& g);

// Exact positive-semidefiniteness: symmetric elimination with diagonal
// pivoting; every pivot must be > 0 (signs decided exactly) and a fully
// zero-diagonal remainder must vanish.
bool gram_psd(const GramForm& g);

// Generic exact rank of an arbitrary Scalar matrix (used for spanning
// families that are not tangle bases).
int matrix_rank(std::vector<std::vector<Scalar>> M);

// Exact positive-semidefiniteness of an arbitrary symmetric Scalar matrix.
bool matrix_psd(std::vector<std::vector<Scalar>> M);

}  // namespace motzkin
