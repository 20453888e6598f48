#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "motzkin/errors.hpp"
#include "motzkin/param.hpp"
#include "test_oracles.hpp"

using namespace motzkin;

TEST_CASE("minimal polynomial of 2cos(pi/nu)") {
  CHECK(cos_minimal_poly(3) == QPoly({-1, 1}));       // x - 1
  CHECK(cos_minimal_poly(4) == QPoly({-2, 0, 1}));    // x^2 - 2
  CHECK(cos_minimal_poly(5) == QPoly({-1, -1, 1}));   // x^2 - x - 1
  CHECK(cos_minimal_poly(6) == QPoly({-3, 0, 1}));    // x^2 - 3

  for (int nu = 3; nu <= 20; ++nu) {
    QPoly mu = cos_minimal_poly(nu);
    CHECK(mu.leading() == 1);
    CHECK(static_cast<unsigned long>(mu.degree()) == euler_phi(2 * nu) / 2);
    // 2cos(pi/nu) is a root of E_nu + 2 (E_j(2cos t) = 2cos(j t)); mu must
    // divide it
    QPoly target = oracle::dickson(nu) + QPoly::constant(Rat(2));
    CHECK(target.divmod(mu).second.is_zero());
    // numeric root check of the distinguished embedding
    double c = 2.0 * std::cos(M_PI / nu);
    double val = 0, p = 1;
    for (int i = 0; i <= mu.degree(); ++i, p *= c) val += mu[i].get_d() * p;
    CHECK(std::abs(val) < 1e-9);
  }
}

TEST_CASE("resultant oracle certifies the minimal polynomials") {
  // Res_z(Phi_{2nu}(z), z^2 - x z + 1) = mu(x)^2
  for (int nu : {4, 5, 6}) {
    QPoly mu = cos_minimal_poly(nu);
    QPoly res = oracle::resultant_z_quadratic(cyclotomic_poly(2 * nu));
    CHECK(res == mu * mu);
  }
}

TEST_CASE("loop parameter construction and parsing") {
  CHECK_THROWS_AS(LoopParam::rational(Rat(1)), DomainError);
  CHECK_THROWS_AS(LoopParam::root_of_unity(2), DomainError);
  CHECK(LoopParam::parse("4").kind() == LoopParam::Kind::Rational);
  CHECK(LoopParam::parse("7/2").value() == Rat(7, 2));
  CHECK(LoopParam::parse("cos:5").nu() == 5);
  CHECK(LoopParam::parse("D=4").value() == 4);
  CHECK(LoopParam::parse("-2").value() == -2);
  CHECK_FALSE(LoopParam::rational(Rat(-2)).positive_regime());
  CHECK(LoopParam::rational(Rat(2)).positive_regime());

  auto P = ParamContext::make(LoopParam::rational(Rat(4)));
  CHECK((P->tau * P->d * P->d).is_one());
  CHECK(P->tau == P->scalar(Rat(1, 9)));

  auto Pc = ParamContext::make(LoopParam::root_of_unity(4));
  CHECK((Pc->tau * Pc->d * Pc->d).is_one());
  CHECK(Pc->tau == Pc->scalar(Rat(1, 2)));  // d = sqrt 2
}

TEST_CASE("chebyshev evaluation") {
  auto P = ParamContext::make(LoopParam::rational(Rat(4)));
  Scalar x = P->scalar(Rat(5, 7));
  CHECK(chebyshev(0, x).is_one());
  CHECK(chebyshev(1, x).is_one());
  // one recursion step: P_2 = 1 - x, by direct polynomial expansion
  CHECK(chebyshev(2, P->tau) == P->scalar(1) - P->tau);
  CHECK(chebyshev(3, P->scalar(Rat(1, 2))).is_zero());
  CHECK_THROWS_AS(chebyshev(-1, x), IndexOutOfRange);
}

TEST_CASE("genericity") {
  CHECK(is_generic(ParamContext::make(LoopParam::rational(Rat(4))), 10));
  auto P2 = ParamContext::make(LoopParam::rational(Rat(2)));
  CHECK(is_generic(P2, 1));
  CHECK_FALSE(is_generic(P2, 2));
  auto Pc = ParamContext::make(LoopParam::root_of_unity(4));
  CHECK(is_generic(Pc, 2));
  CHECK_FALSE(is_generic(Pc, 3));
}

TEST_CASE("lambda") {
  auto P = ParamContext::make(LoopParam::rational(Rat(4)));
  CHECK(lambda(P, 1) == P->scalar(Rat(4, 3)));
  auto P2 = ParamContext::make(LoopParam::rational(Rat(2)));
  CHECK_THROWS_AS(lambda(P2, 2), GenericityViolation);
  try {
    lambda(P2, 2);
  } catch (const GenericityViolation& e) {
    CHECK(e.stage == 2);
  }
  // lambda_2 at D = 1 + sqrt 2 is 2 + sqrt 2
  auto Pc = ParamContext::make(LoopParam::root_of_unity(4));
  Scalar expected = Pc->scalar(2) + Scalar::generator(Pc->F);
  CHECK(lambda(Pc, 2) == expected);
  CHECK(std::abs(lambda(Pc, 2).to_double() - (2 + std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("cyclotomic arithmetic is a field") {
  auto F = FieldContext::real_cyclotomic(5);
  Scalar c = Scalar::generator(F);             // golden ratio
  CHECK(c * c == c + Scalar::one(F));          // c^2 = c + 1
  Scalar inv = c.inverse();
  CHECK((c * inv).is_one());
  CHECK(inv == c - Scalar::one(F));            // 1/phi = phi - 1
  CHECK_THROWS_AS(Scalar::zero(F).inverse(), DomainError);
}

TEST_CASE("sign determination under the distinguished embedding") {
  auto F = FieldContext::real_cyclotomic(4);
  Scalar c = Scalar::generator(F);  // sqrt 2
  CHECK((c - Scalar::of(F, Rat(7, 5))).sign() == 1);   // sqrt2 > 1.4
  CHECK((c - Scalar::of(F, Rat(3, 2))).sign() == -1);  // sqrt2 < 1.5
  CHECK((c - c).sign() == 0);
  // 99/70 and 140/99 are tight two-sided bounds for sqrt 2
  CHECK((c - Scalar::of(F, Rat(99, 70))).sign() == -1);
  CHECK((c - Scalar::of(F, Rat(140, 99))).sign() == 1);

  // quadratic layer: y = sqrt(sqrt 2) = 2^{1/4}
  auto G = FieldContext::with_sqrt(F, c.coeffs());
  Scalar y = Scalar::sqrt_generator(G);
  CHECK((y * y) == c.lift_to(G));
  CHECK((y - Scalar::of(G, Rat(1))).sign() == 1);
  CHECK((y - Scalar::of(G, Rat(6, 5))).sign() == -1);  // 2^{1/4} < 1.2
  CHECK((y.inverse() * y).is_one());
}

TEST_CASE("quadratic extension over the rationals") {
  auto Q = FieldContext::rationals();
  auto G = FieldContext::with_sqrt(Q, {Rat(3)});
  Scalar y = Scalar::sqrt_generator(G);
  CHECK(y * y == Scalar::of(G, 3));
  CHECK((y - Scalar::of(G, Rat(17, 10))).sign() == 1);  // sqrt3 > 1.7
  CHECK((y - Scalar::of(G, Rat(7, 4))).sign() == -1);   // sqrt3 < 1.75
  Scalar a = Scalar::of(G, 2) + y;
  CHECK((a * a.inverse()).is_one());

  Rat root;
  CHECK(try_rational_sqrt(Rat(9, 4), root));
  CHECK(root == Rat(3, 2));
  CHECK_FALSE(try_rational_sqrt(Rat(3), root));
  CHECK_FALSE(try_rational_sqrt(Rat(-4), root));
}

TEST_CASE("root-of-unity positivity of the chebyshev values") {
  for (int nu : {3, 4, 5, 6, 7}) {
    auto P = ParamContext::make(LoopParam::root_of_unity(nu));
    CHECK(chebyshev(nu - 1, P->tau).is_zero());
    for (int k = 1; k <= nu - 2; ++k) CHECK(chebyshev(k, P->tau).sign() == 1);
  }
}

TEST_CASE("scalar serialization") {
  auto P = ParamContext::make(LoopParam::rational(Rat(7, 2)));
  CHECK(P->D.json() == "{\"num\":7,\"den\":2}");
  auto Pc = ParamContext::make(LoopParam::root_of_unity(4));
  CHECK(Pc->D.json() ==
        "{\"poly\":[{\"num\":1,\"den\":1},{\"num\":1,\"den\":1}],\"nu\":4}");
  CHECK(Pc->D.str() == "1 + c");
}
