#include "motzkin/idempotents.hpp"

#include "motzkin/errors.hpp"

namespace motzkin {

const AlgElem& JWTower::g(int k) {
  if (k < 1) throw IndexOutOfRange("jw: k must be >= 1");
  while (static_cast<int>(g_.size()) < k) {
    int next = static_cast<int>(g_.size()) + 1;
    if (next == 1) {
      AlgElem g1 = AlgElem::identity(P_, 1) - AlgElem::gen(P_, GenKind::p, 1, 1);
      g_.push_back(std::move(g1));
      continue;
    }
    const int j = next - 1;  // recursion stage: g_{j+1} from g_j
    Scalar coeff = lambda(P_, j) / P_->D;  // (1/d) P_{j-1}/P_j
    AlgElem gj = g_[j - 1].extend(1);
    AlgElem one = AlgElem::identity(P_, next);
    AlgElem pj1 = AlgElem::gen(P_, GenKind::p, next, next);
    AlgElem ek = AlgElem::gen(P_, GenKind::e, next, j);
    AlgElem a = gj * (one - pj1);
    AlgElem b = (gj * ek) * gj;
    g_.push_back(a - b * coeff);
  }
  return g_[k - 1];
}

int JWTower::max_constructible(int upto) {
  int k = 0;
  for (int t = 1; t <= upto; ++t) {
    try {
      g(t);
      k = t;
    } catch (const GenericityViolation&) {
      break;
    }
  }
  return k;
}

AlgElem jw(int k, const ParamPtr& P) {
  JWTower tower(P);
  return tower.g(k);
}

JWReport verify_jw(int k, const ParamPtr& P) {
  JWTower tower(P);
  const AlgElem& gk = tower.g(k);
  JWReport rep;

  rep.annihilation = true;
  for (int i = 1; i < k; ++i) {
    for (GenKind kind : {GenKind::e, GenKind::l, GenKind::r}) {
      AlgElem x = AlgElem::gen(P, kind, k, i);
      if (!(gk * x).is_zero() || !(x * gk).is_zero()) rep.annihilation = false;
    }
  }

  rep.projection = (gk.star() == gk) && (gk * gk == gk);

  // E(g_k) = (d P_k / D P_{k-1}) g_{k-1}, with g_0 = 1_0
  Scalar expect = P->d * chebyshev(k, P->tau) /
                  (P->D * chebyshev(k - 1, P->tau));
  AlgElem prev = k == 1 ? AlgElem::identity(P, 0) : tower.g(k - 1);
  rep.expectation = gk.cond_expect() == prev * expect;

  // g_i g_k = g_k for i < k; the mirror product is its star image, and
  // i = k is the projection identity above
  rep.absorption = true;
  for (int i = 1; i < k; ++i) {
    AlgElem gi = tower.g(i).extend(k - i);
    if (!(gi * gk == gk)) rep.absorption = false;
  }
  if (k == 1) rep.absorption = true;

  rep.unit_coefficient = gk.coeff(Tangle::identity(k)).is_one();
  rep.trace = gk.trace();
  return rep;
}

AlgElem minimal_projection(int k, int i, const ParamPtr& P) {
  if (i < 0 || i > k) throw IndexOutOfRange("minimal_projection: 0 <= i <= k");
  if (P->param.kind() == LoopParam::Kind::RootOfUnity &&
      i > P->param.nu() - 2)
    throw IndexOutOfRange("minimal_projection: block index beyond truncation");
  // p_{i+1} ... p_k = 1_i juxtaposed with isolated columns
  AlgElem tail = AlgElem::from_tangle(
      P, Tangle::identity(i).juxtapose(Tangle::all_isolated(k - i, k - i)));
  if (i == 0) return tail;
  return jw(i, P).extend(k - i) * tail;
}

namespace {

AlgElem chain_r(const ParamPtr& P, int n, int from) {
  // r_from r_{from+1} ... r_{n-1}
  AlgElem acc = AlgElem::gen(P, GenKind::r, n, from);
  for (int t = from + 1; t <= n - 1; ++t)
    acc = acc * AlgElem::gen(P, GenKind::r, n, t);
  return acc;
}

AlgElem chain_l(const ParamPtr& P, int n, int to) {
  // l_{n-1} l_{n-2} ... l_to
  AlgElem acc = AlgElem::gen(P, GenKind::l, n, n - 1);
  for (int t = n - 2; t >= to; --t)
    acc = acc * AlgElem::gen(P, GenKind::l, n, t);
  return acc;
}

}  // namespace

MatrixUnitFamily matrix_units(int n, const ParamPtr& P) {
  if (n < 2) throw IndexOutOfRange("matrix_units: n >= 2");
  MatrixUnitFamily fam;
  if (n == 2) {
    // the explicit two-strand system; the first block needs 1/sqrt(D-1)
    ParamPtr Q = P;
    Scalar sqrt_d = Scalar::zero(P->F);
    Rat root;
    if (P->d.is_rational() && try_rational_sqrt(P->d.rational_value(), root)) {
      sqrt_d = Q->scalar(root);
    } else {
      Q = P->extend_sqrt(P->d);
      sqrt_d = Scalar::sqrt_generator(Q->F);
    }
    fam.P = Q;
    fam.block_sizes = {2, 2, 1};
    auto gen2 = [&](GenKind kind, int i) { return AlgElem::gen(Q, kind, 2, i); };
    AlgElem p1 = gen2(GenKind::p, 1), p2 = gen2(GenKind::p, 2);
    AlgElem e1 = gen2(GenKind::e, 1);
    AlgElem l1 = gen2(GenKind::l, 1), r1 = gen2(GenKind::r, 1);
    AlgElem p1p2 = p1 * p2;
    Scalar inv_sqrt = sqrt_d.inverse();
    Scalar inv_d = Q->d.inverse();
    AlgElem g1 = AlgElem::identity(Q, 1) - AlgElem::gen(Q, GenKind::p, 1, 1);
    g1 = g1.extend(1);
    // the e-terms carry the trace-normalized e/D, which is what makes the
    // block a genuine 2x2 system (same normalization reading as lambda_k)
    fam.units.push_back({0, 1, 1, p1p2});
    fam.units.push_back({0, 1, 2, (p1p2 - p1 * e1) * inv_sqrt});
    fam.units.push_back({0, 2, 1, (p1p2 - e1 * p1) * inv_sqrt});
    fam.units.push_back(
        {0, 2, 2, (p1p2 + e1 - p1 * e1 - e1 * p1) * inv_d});
    fam.units.push_back({1, 1, 1, p2 * g1 * p2});
    fam.units.push_back({1, 1, 2, p2 * g1 * l1});
    fam.units.push_back({1, 2, 1, r1 * g1 * p2});
    fam.units.push_back({1, 2, 2, r1 * g1 * l1});
    fam.units.push_back({2, 1, 1, jw(2, Q)});
    return fam;
  }
  // top-block family E^{(n-1)}_{i,j} plus E^{(n)} = g_n
  fam.P = P;
  fam.block_sizes = {n, 1};
  JWTower tower(P);
  AlgElem gn1 = tower.g(n - 1).extend(1);
  AlgElem pn = AlgElem::gen(P, GenKind::p, n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      AlgElem left = i == n ? pn : chain_r(P, n, i);
      AlgElem right = j == n ? pn : chain_l(P, n, j);
      fam.units.push_back({0, i, j, left * gn1 * right});
    }
  }
  fam.units.push_back({1, 1, 1, tower.g(n)});
  return fam;
}

MatrixUnitReport verify_matrix_units(const MatrixUnitFamily& fam,
                                     const GramForm& gram) {
  MatrixUnitReport rep;
  for (const auto& a : fam.units) {
    for (const auto& b : fam.units) {
      AlgElem prod = a.elem * b.elem;
      AlgElem expected = AlgElem::zero(fam.P, prod.top(), prod.bottom());
      if (a.block == b.block && a.j == b.i) {
        for (const auto& c : fam.units)
          if (c.block == a.block && c.i == a.i && c.j == b.j) expected = c.elem;
      }
      AlgElem defect = prod - expected;
      ++rep.checked;
      if (!defect.is_zero()) {
        ++rep.exact_defects;
        if (!radical_contains(defect, gram)) ++rep.radical_defects;
      }
    }
  }
  return rep;
}

}  // namespace motzkin
