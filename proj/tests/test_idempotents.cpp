#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "motzkin/errors.hpp"
#include "motzkin/gram.hpp"
#include "motzkin/idempotents.hpp"

using namespace motzkin;

namespace {
const ParamPtr P4 = ParamContext::make(LoopParam::rational(Rat(4)));
const ParamPtr P2 = ParamContext::make(LoopParam::rational(Rat(2)));
const ParamPtr Pc4 = ParamContext::make(LoopParam::root_of_unity(4));
}  // namespace

TEST_CASE("the tower starts at g_1 = 1 - p_1") {
  CHECK(jw(1, P4) ==
        AlgElem::identity(P4, 1) - AlgElem::gen(P4, GenKind::p, 1, 1));
}

TEST_CASE("g_2 at D = 4") {
  AlgElem g2 = jw(2, P4);
  CHECK(g2.trace() == P4->scalar(Rat(1, 2)));  // (d/D)^2 P_2(tau)
  CHECK(g2 * g2 == g2);
  CHECK(g2.star() == g2);
  // the identity coefficient is 1
  CHECK(g2.coeff(Tangle::identity(2)).is_one());
}

TEST_CASE("genericity failure surfaces with its stage") {
  CHECK_THROWS_AS(jw(3, P2), GenericityViolation);
  try {
    jw(3, P2);
  } catch (const GenericityViolation& e) {
    CHECK(e.stage == 2);
  }
  JWTower tower(P2);
  CHECK(tower.max_constructible(6) == 2);
  JWTower tower4(Pc4);
  CHECK(tower4.max_constructible(6) == 3);
}

TEST_CASE("verify_jw") {
  auto r1 = verify_jw(1, P4);
  CHECK(r1.all());
  auto r2 = verify_jw(2, P4);
  CHECK(r2.all());
  auto r3 = verify_jw(3, Pc4);
  CHECK(r3.all());
  CHECK(r3.trace.is_zero());
  auto r2_2 = verify_jw(2, P2);
  CHECK(r2_2.all());
  CHECK(r2_2.trace.is_zero());
}

TEST_CASE("trace of the tower follows the chebyshev sequence") {
  JWTower tower(P4);
  for (int k = 1; k <= 5; ++k) {
    Scalar expected = (P4->d / P4->D).pow(k) * chebyshev(k, P4->tau);
    CHECK(tower.g(k).trace() == expected);
  }
}

TEST_CASE("minimal projections") {
  AlgElem q21 = minimal_projection(2, 1, P4);
  CHECK(q21 == jw(1, P4).extend(1) * AlgElem::gen(P4, GenKind::p, 2, 2));
  CHECK(q21.trace() == P4->scalar(Rat(3, 16)));  // d/D^2
  for (int k = 1; k <= 4; ++k) {
    CHECK(minimal_projection(k, 0, P4).trace() ==
          P4->D.pow(-static_cast<long>(k)));
    for (int i = 0; i <= k; ++i) {
      AlgElem q = minimal_projection(k, i, P4);
      CHECK(q * q == q);
      CHECK(q.star() == q);
      CHECK(q.trace() == P4->d.pow(i) * chebyshev(i, P4->tau) *
                             P4->D.pow(-static_cast<long>(k)));
      for (int j = 0; j < i; ++j)
        CHECK((minimal_projection(k, j, P4) * q).is_zero());
    }
  }
  CHECK_THROWS_AS(minimal_projection(3, 4, P4), IndexOutOfRange);
  CHECK_THROWS_AS(minimal_projection(4, 3, Pc4), IndexOutOfRange);
}

TEST_CASE("matrix units at n = 2, D = 4 (exact, needs sqrt 3)") {
  auto fam = matrix_units(2, P4);
  CHECK(fam.P->F->has_sqrt());
  REQUIRE(fam.units.size() == 9);
  auto rep = verify_matrix_units(fam, gram(2, 2, P4));
  CHECK(rep.checked == 81);
  CHECK(rep.pass_exact());
  // orthogonality to the g_2 block
  for (const auto& u : fam.units) {
    if (u.block == 2) continue;
    CHECK((u.elem * fam.units.back().elem).trace().is_zero());
  }
}

TEST_CASE("matrix units at n = 2, D = 2 (mod radical, rational sqrt)") {
  auto fam = matrix_units(2, P2);
  CHECK_FALSE(fam.P->F->has_sqrt());  // sqrt(D-1) = 1
  auto rep = verify_matrix_units(fam, gram(2, 2, P2));
  CHECK(rep.pass_mod_radical());
  // g_2 spans the radical here; the relations still hold, but the block is
  // invisible to the trace
  CHECK(radical_contains(jw(2, P2), gram(2, 2, P2)));
}

TEST_CASE("matrix units at n = 3, D = 1+sqrt2 (mod radical)") {
  auto fam = matrix_units(3, Pc4);
  REQUIRE(fam.units.size() == 10);  // 3x3 top block plus g_3
  auto rep = verify_matrix_units(fam, gram(3, 3, Pc4));
  CHECK(rep.pass_mod_radical());
  // tr(E^{(2)}_{ij} g_3) = 0
  const AlgElem& g3 = fam.units.back().elem;
  for (const auto& u : fam.units)
    if (u.block == 0) CHECK((u.elem * g3).trace().is_zero());
}

TEST_CASE("g_k is not supported on lower-rank diagrams") {
  JWTower tower(P4);
  for (int k = 1; k <= 4; ++k) {
    const AlgElem& g = tower.g(k);
    CHECK(g.coeff(Tangle::identity(k)).is_one());
    // the identity is the only full-rank diagram, so removing it leaves
    // rank < k support only
    for (const auto& [t, c] : g.terms())
      if (!(t == Tangle::identity(k))) CHECK(t.rank() < k);
  }
}
