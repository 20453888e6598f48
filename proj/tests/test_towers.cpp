#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "motzkin/errors.hpp"
#include "motzkin/idempotents.hpp"
#include "motzkin/towers.hpp"
#include "test_oracles.hpp"

using namespace motzkin;

namespace {
const ParamPtr P4 = ParamContext::make(LoopParam::rational(Rat(4)));
const ParamPtr Pc4 = ParamContext::make(LoopParam::root_of_unity(4));
}  // namespace

TEST_CASE("block dimensions") {
  CHECK(block_dims(3, LoopParam::rational(Rat(4))) ==
        std::vector<Int>{4, 5, 3, 1});
  CHECK(block_dims(4, LoopParam::root_of_unity(4)) ==
        std::vector<Int>{9, 12, 8});
  CHECK(block_dims(2, LoopParam::root_of_unity(3)) == std::vector<Int>{2, 2});
  CHECK(block_dims(0, LoopParam::root_of_unity(4)) == std::vector<Int>{1});
}

TEST_CASE("bratteli diagrams") {
  auto b4 = bratteli(LoopParam::rational(Rat(4)), 4);
  CHECK(b4.inclusions[1] ==
        std::vector<std::vector<int>>{{1, 1, 0}, {1, 1, 1}});
  auto b2 = bratteli(LoopParam::root_of_unity(3), 4);
  CHECK(b2.inclusions[1] == std::vector<std::vector<int>>{{1, 1}, {1, 1}});
  auto bc = bratteli(LoopParam::root_of_unity(4), 8);
  for (size_t k = 3; k < bc.levels.size(); ++k)
    CHECK(bc.levels[k].size() == 3);  // width stabilizes at 3
  // dims propagate tridiagonally
  for (size_t k = 0; k + 1 < bc.levels.size(); ++k)
    for (size_t s = 0; s < bc.levels[k + 1].size(); ++s) {
      Int acc = 0;
      for (size_t r = 0; r < bc.levels[k].size(); ++r)
        if (bc.inclusions[k][r][s]) acc += bc.levels[k][r];
      CHECK(acc == bc.levels[k + 1][s]);
    }
  CHECK(bc.dot().find("\"0:0\"") != std::string::npos);
}

TEST_CASE("weight vectors") {
  auto w1 = weight_vector(1, P4);
  REQUIRE(w1.size() == 2);
  CHECK(w1[0] == P4->scalar(Rat(1, 4)));
  CHECK(w1[1] == P4->scalar(Rat(3, 4)));
  auto w2 = weight_vector(2, P4);
  REQUIRE(w2.size() == 3);
  CHECK(w2[0] == P4->scalar(Rat(1, 16)));
  CHECK(w2[1] == P4->scalar(Rat(3, 16)));
  CHECK(w2[2] == P4->scalar(Rat(1, 2)));  // D(D-2)/D^2

  // D = 2: the third block vanishes and the vector truncates
  auto P2 = ParamContext::make(LoopParam::rational(Rat(2)));
  auto w2_2 = weight_vector(2, P2);
  REQUIRE(w2_2.size() == 2);
  CHECK(w2_2[0] == P2->scalar(Rat(1, 4)));
  CHECK(w2_2[1] == P2->scalar(Rat(1, 4)));

  // entries equal traces of the constructed minimal projections
  for (const ParamPtr& P : {P4, Pc4}) {
    for (int k = 1; k <= 4; ++k) {
      auto w = weight_vector(k, P);
      for (size_t i = 0; i < w.size(); ++i)
        CHECK(minimal_projection(k, static_cast<int>(i), P).trace() == w[i]);
    }
  }
}

TEST_CASE("gns dimensions from gram ranks") {
  CHECK(gns_dim(0, P4) == 1);
  CHECK(gns_dim(5, P4) == 21);
  CHECK(gns_dim(5, Pc4) == 21);
  CHECK(gns_dim(6, Pc4) == 50);
  CHECK(gns_dim(7, Pc4) == 120);
}

TEST_CASE("closed dimension formula via Q powering") {
  CHECK(dim_closed_form(7, 4) == 120);
  CHECK(dim_closed_form(6, 4) == 50);
  CHECK(dim_closed_form(5, 3) == 16);
  for (int nu : {3, 4, 5}) {
    for (int k = 0; k <= 10; ++k)
      CHECK(dim_closed_form(k, nu) == oracle::q_power_entry(nu, k));
  }
}

TEST_CASE("generating function coefficients") {
  CHECK(gf_coefficients(4, 8) ==
        std::vector<Int>{1, 1, 2, 4, 9, 21, 50, 120, 289});
  CHECK(gf_coefficients(3, 5) == std::vector<Int>{1, 1, 2, 4, 8, 16});
  for (int nu : {3, 4, 5, 6}) {
    auto h = gf_coefficients(nu, 12);
    for (int k = 0; k <= 12; ++k) CHECK(h[k] == dim_closed_form(k, nu));
  }
  auto cmp = gf_chebyshev_comparison(4, 12);
  CHECK(cmp.first_mismatch == 3);
  CHECK(cmp.resolvent[3] == 4);
  CHECK(cmp.chebyshev_ratio[3] == 5);
  CHECK(gf_chebyshev_comparison(3, 12).first_mismatch == -1);
}

TEST_CASE("commutant tables") {
  auto t2 = commutant_table(2, Rat(4));
  REQUIRE(t2.blocks.size() == 3);
  for (const auto& b : t2.blocks) CHECK(b.dim == 1);
  // weights are {1, q, 1/q} over (1 + q + 1/q)
  Scalar norm = (t2.field->scalar(1) + t2.q + t2.q.inverse()).inverse();
  CHECK(t2.blocks[0].weight == norm);                  // (1,0,0)
  CHECK(t2.blocks[1].weight == t2.q * norm);           // (0,1,0)
  CHECK(t2.blocks[2].weight == t2.q.inverse() * norm); // (0,0,1)

  auto t3 = commutant_table(3, Rat(4));
  REQUIRE(t3.blocks.size() == 6);
  std::multiset<long> dims;
  for (const auto& b : t3.blocks) dims.insert(b.dim.get_si());
  CHECK(dims == std::multiset<long>{1, 1, 1, 2, 2, 2});
  CHECK(t3.dim_total() == 15);

  for (int k = 1; k <= 8; ++k)
    CHECK(commutant_table(k, Rat(4)).blocks.size() ==
          static_cast<size_t>(k * (k + 1) / 2));

  // q + 1/q = D - 1 in the quadratic extension
  auto t4 = commutant_table(4, Rat(4));
  CHECK(t4.q + t4.q.inverse() == t4.field->scalar(3));
  CHECK(t4.field->F->has_sqrt());  // q = (3 + sqrt5)/2

  // D = 3 keeps everything rational (q = 1)
  auto t3r = commutant_table(3, Rat(3));
  CHECK_FALSE(t3r.field->F->has_sqrt());
  CHECK(t3r.q.is_one());

  CHECK_THROWS_AS(commutant_table(3, Rat(5, 2)), DomainError);

  // brute-force centralizer dimensions: group the 3^{k-1} strings by their
  // two-torus weight and sum squared multiplicities
  for (int k = 2; k <= 5; ++k) {
    auto table = commutant_table(k, Rat(4));
    std::map<std::pair<int, int>, Int> classes;
    int total = 1;
    for (int t = 0; t < k - 1; ++t) total *= 3;
    for (int s = 0; s < total; ++s) {
      int v = s, ones = 0, twos = 0;
      for (int t = 0; t < k - 1; ++t) {
        if (v % 3 == 1) ++ones;
        if (v % 3 == 2) ++twos;
        v /= 3;
      }
      classes[{ones, twos}] += 1;
    }
    Int brute = 0;
    for (const auto& [key, mult] : classes) brute += mult * mult;
    CHECK(brute == table.dim_total());
    for (const auto& b : table.blocks)
      CHECK(classes[{b.j, b.l}] == b.dim);
  }
}

TEST_CASE("index constants") {
  CHECK(index_report(1, P4) == P4->scalar(16));
  CHECK(index_report(0, P4).is_one());
  // (1+sqrt2)^4 = 17 + 12 sqrt2
  Scalar expected = Pc4->scalar(17) + Scalar::generator(Pc4->F) * Pc4->scalar(12);
  CHECK(index_report(2, Pc4) == expected);
}

TEST_CASE("relative commutant dimensions at roots of unity") {
  CHECK(commutant_dim_root(4, 4) == 50);  // 4^2 + 5^2 + 3^2
  CHECK(commutant_dim_root(1, 4) == 1);
  CHECK(commutant_dim_root(3, 4) == 9);   // (2,2,1) squared
}

TEST_CASE("dimension identities against gram ranks") {
  for (const auto& spec :
       {LoopParam::rational(Rat(4)), LoopParam::root_of_unity(4)}) {
    auto P = ParamContext::make(spec);
    for (int k = 1; k <= 3; ++k) {
      auto dims = block_dims(k, spec);
      Int sq = 0;
      for (const auto& v : dims) sq += v * v;
      CHECK(sq == gns_dim(2 * k, P));
      auto next = block_dims(k + 1, spec);
      Int mixed = 0;
      for (size_t r = 0; r < dims.size() && r < next.size(); ++r)
        mixed += dims[r] * next[r];
      CHECK(mixed == gns_dim(2 * k + 1, P));
    }
  }
}
