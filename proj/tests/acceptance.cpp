// Acceptance suite: runs every criterion at its stated tolerance (all checks
// are exact) and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <vector>

#include "motzkin/algebra.hpp"
#include "motzkin/bimodule.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/gram.hpp"
#include "motzkin/idempotents.hpp"
#include "motzkin/towers.hpp"
#include "test_oracles.hpp"

using namespace motzkin;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
int criterion_no = 0;

void report(const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
  ++criterion_no;
  std::printf("[%2d] %s %-38s (%.1f s)%s%s\n", criterion_no,
              pass ? "PASS" : "FAIL", name.c_str(), seconds,
              detail.empty() ? "" : " ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <class F>
void criterion(const std::string& name, F&& body) {
  auto start = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  report(name, pass, s, detail);
}

const ParamPtr P4 = ParamContext::make(LoopParam::rational(Rat(4)));
const ParamPtr P2 = ParamContext::make(LoopParam::rational(Rat(2)));
const ParamPtr Pc3 = ParamContext::make(LoopParam::root_of_unity(3));
const ParamPtr Pc4 = ParamContext::make(LoopParam::root_of_unity(4));
const ParamPtr Pc5 = ParamContext::make(LoopParam::root_of_unity(5));

// shared across criteria 4 and 8
std::map<int, Int> nu4_ranks;

Int nu4_rank(int j) {
  auto it = nu4_ranks.find(j);
  if (it != nu4_ranks.end()) return it->second;
  Int r = gns_dim(j, Pc4);
  nu4_ranks.emplace(j, r);
  return r;
}

}  // namespace

int main() {
  // 1. Motzkin counting
  criterion("motzkin-counting", [](std::string& detail) {
    const std::vector<long> prefix{1, 1, 2, 4, 9, 21, 51, 127};
    for (int k = 0; k <= 7; ++k)
      if (count_motzkin(k) != prefix[k]) return false;
    // binomial closed form against the convolution recursion up to 14
    auto conv = oracle::motzkin_convolution(14);
    for (int k = 0; k <= 14; ++k) {
      Int closed = 0;
      for (int i = 0; 2 * i <= k; ++i)
        closed += binom(k, 2 * i) * binom(2 * i, i) / (i + 1);
      if (closed != conv[k] || count_motzkin(k) != closed) return false;
    }
    detail = "k<=14, prefix 1,1,2,4,9,21,51,127";
    return true;
  });

  // 2. Path/block dimensions
  criterion("path-block-dims", [](std::string&) {
    if (!(count_paths(3, 0) == 4 && count_paths(3, 1) == 5 &&
          count_paths(3, 2) == 3 && count_paths(3, 3) == 1))
      return false;
    for (int k = 0; k <= 8; ++k) {
      Int sum = 0;
      for (int r = 0; r <= k; ++r)
        sum += count_paths(k, r) * count_paths(k, r);
      if (sum != count_motzkin(2 * k)) return false;
    }
    return true;
  });

  // 3. Gram ranks at the generic parameter
  criterion("gram-ranks-generic-D4", [](std::string& detail) {
    for (int j = 0; j <= 9; ++j) {
      Int rank = gns_dim(j, P4);
      if (rank != count_motzkin(j)) {
        detail = "j=" + std::to_string(j) + " rank " + rank.get_str();
        return false;
      }
    }
    detail = "ranks = Motzkin numbers, j<=9 (largest 835x835)";
    return true;
  });

  // 4. Gram ranks at D = 1 + sqrt 2
  criterion("gram-ranks-root-cos4", [](std::string& detail) {
    // the small values are classical anchors (21 at j=5, 120 at j=7); the
    // rest comes from the integer Q-powering oracle
    const std::vector<long> expected{1, 1, 2, 4, 9, 21, 50, 120, 289, 697};
    for (int j = 0; j <= 9; ++j) {
      if (oracle::q_power_entry(4, j) != expected[j]) return false;
      Int rank = nu4_rank(j);
      if (rank != expected[j]) {
        detail = "j=" + std::to_string(j) + " rank " + rank.get_str();
        return false;
      }
    }
    detail = "ranks 1,1,2,4,9,21,50,120,289,697";
    return true;
  });

  // 5. Idempotent tower
  criterion("idempotent-tower", [](std::string& detail) {
    JWTower tower(P4);
    for (int k = 1; k <= 7; ++k) {
      Scalar expected = (P4->d / P4->D).pow(k) * chebyshev(k, P4->tau);
      if (!(tower.g(k).trace() == expected)) return false;
    }
    {
      // tr(g_8) exactly from explicit g_7: expand one recursion step and
      // use trace cyclicity tr(g_7 e_7 g_7) = tr(g_7^2 e_7) = tr(g_7 e_7)
      // (cyclicity is itself verified exhaustively by the algebra suite)
      const AlgElem& g7 = tower.g(7);
      AlgElem g7e = g7.extend(1);
      Scalar tr8 = (g7e * (AlgElem::identity(P4, 8) -
                           AlgElem::gen(P4, GenKind::p, 8, 8)))
                       .trace() -
                   lambda(P4, 7) / P4->D *
                       (g7e * AlgElem::gen(P4, GenKind::e, 8, 7)).trace();
      Scalar expected = (P4->d / P4->D).pow(8) * chebyshev(8, P4->tau);
      if (!(tr8 == expected)) return false;
    }
    if (!jw(2, P2).trace().is_zero()) return false;
    if (!jw(3, Pc4).trace().is_zero()) return false;
    for (const ParamPtr& P : {P4, P2, Pc4, Pc5}) {
      JWTower t(P);
      int top = t.max_constructible(6);
      for (int k = 1; k <= top; ++k)
        if (!verify_jw(k, P).all()) {
          detail = "verify_jw failed at k=" + std::to_string(k) + " D=" +
                   P->param.str();
          return false;
        }
    }
    detail = "traces k<=8; verify_jw at D in {4,2,cos4,cos5}";
    return true;
  });

  // 6. Weight vectors and inclusions
  criterion("weights-and-inclusions", [](std::string&) {
    auto w1 = weight_vector(1, P4);
    if (!(w1.size() == 2 && w1[0] == P4->scalar(Rat(1, 4)) &&
          w1[1] == P4->scalar(Rat(3, 4))))
      return false;
    auto w2 = weight_vector(2, P4);
    if (!(w2.size() == 3 && w2[0] == P4->scalar(Rat(1, 16)) &&
          w2[1] == P4->scalar(Rat(3, 16)) && w2[2] == P4->scalar(Rat(1, 2))))
      return false;
    auto b4 = bratteli(LoopParam::rational(Rat(4)), 2);
    if (b4.inclusions[1] !=
        std::vector<std::vector<int>>{{1, 1, 0}, {1, 1, 1}})
      return false;
    auto b2 = bratteli(LoopParam::rational(Rat(2)), 2);
    if (b2.inclusions[1] != std::vector<std::vector<int>>{{1, 1}, {1, 1}})
      return false;
    for (const ParamPtr& P : {P4, Pc4, Pc5}) {
      for (int k = 1; k <= 5; ++k) {
        auto w = weight_vector(k, P);
        for (size_t i = 0; i < w.size(); ++i)
          if (!(minimal_projection(k, static_cast<int>(i), P).trace() ==
                w[i]))
            return false;
      }
    }
    return true;
  });

  // 7. Matrix units
  criterion("matrix-units", [](std::string& detail) {
    auto fam4 = matrix_units(2, P4);
    auto rep4 = verify_matrix_units(fam4, gram(2, 2, P4));
    if (!(rep4.checked == 81 && rep4.pass_exact())) {
      detail = "n=2 D=4 exact defects " + std::to_string(rep4.exact_defects);
      return false;
    }
    auto fam2 = matrix_units(2, P2);
    auto rep2 = verify_matrix_units(fam2, gram(2, 2, P2));
    if (!rep2.pass_mod_radical()) return false;
    auto fam3 = matrix_units(3, Pc4);
    auto rep3 = verify_matrix_units(fam3, gram(3, 3, Pc4));
    if (!rep3.pass_mod_radical()) return false;
    detail = "81 exact at D=4; mod radical at D=2 and n=3, cos4";
    return true;
  });

  // 8. Dimension formulas
  criterion("dimension-formulas", [](std::string& detail) {
    for (int k = 0; k <= 9; ++k) {
      if (gns_dim(k, Pc3) != dim_closed_form(k, 3)) return false;
      if (nu4_rank(k) != dim_closed_form(k, 4)) return false;
    }
    for (int k = 0; k <= 7; ++k)
      if (gns_dim(k, Pc5) != dim_closed_form(k, 5)) return false;
    for (int nu : {3, 4, 5}) {
      auto h = gf_coefficients(nu, 12);
      for (int k = 0; k <= 12; ++k)
        if (h[k] != dim_closed_form(k, nu)) return false;
    }
    auto cmp = gf_chebyshev_comparison(4, 12);
    bool flag_ok = cmp.first_mismatch == 3 && cmp.resolvent[3] == 4 &&
                   cmp.chebyshev_ratio[3] == 5;
    detail = "flagged: P3/P4 series MISMATCH at x^3 (4 vs 5), as expected";
    return flag_ok;
  });

  // 9. Commutant tables
  criterion("commutant-tables", [](std::string&) {
    for (int k = 1; k <= 8; ++k) {
      auto t = commutant_table(k, Rat(4));  // construction asserts the
                                            // weight sum and block count
      if (t.blocks.size() != static_cast<size_t>(k * (k + 1) / 2))
        return false;
    }
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
      if (brute != table.dim_total()) return false;
      for (const auto& b : table.blocks)
        if (classes[{b.j, b.l}] != b.dim) return false;
    }
    return true;
  });

  // 10. Bimodule stage checks
  criterion("bimodule-stages", [](std::string& detail) {
    for (const ParamPtr& P : {P4, Pc4}) {
      std::vector<AlgElem> ps{AlgElem::identity(P, 1), jw(1, P), jw(2, P)};
      for (const auto& p : ps)
        for (int m = 0; m <= 2; ++m)
          if (!matrix_psd(bimod_gram(bimod_basis(m, p)))) {
            detail = "psd failed @D=" + P->param.str();
            return false;
          }
      for (const auto& p : {AlgElem::identity(P, 1), jw(1, P)})
        for (const auto& q : {AlgElem::identity(P, 1), jw(1, P)}) {
          auto vs = bimod_basis(1, p);
          auto us = bimod_basis(1, q);
          Scalar factor =
              P->D.pow(tensor_isometry_excess(vs.shape.k, us.shape.k));
          for (const auto& v1 : vs.basis)
            for (const auto& u1 : us.basis)
              for (const auto& v2 : vs.basis)
                for (const auto& u2 : us.basis)
                  if (!(inner(tensor_T0(v1, u1), tensor_T0(v2, u2)) ==
                        inner(act_right(v1, pairing_M(u1, u2)), v2) *
                            factor)) {
                    detail = "T0 isometry failed";
                    return false;
                  }
        }
    }
    {
      // T0 stage surjectivity at p = q = g_1, D = 1+sqrt2: the directed-limit
      // statement is an equality of stage ranks from m = 2 on; the stage-1
      // image is one dimension short (2 of 3), which is reported
      AlgElem g1 = jw(1, Pc4);
      auto image_rank = [&](int m) {
        auto vs = bimod_basis(m, g1);
        std::vector<BimodVector> images;
        for (const auto& v : vs.basis)
          for (const auto& u : vs.basis) images.push_back(tensor_T0(v, u));
        const int n = static_cast<int>(images.size());
        std::vector<std::vector<Scalar>> gm(n);
        for (int i = 0; i < n; ++i) {
          gm[i].assign(n, Scalar::zero(Pc4->F));
          for (int j = 0; j < n; ++j) gm[i][j] = inner(images[i], images[j]);
        }
        return matrix_rank(std::move(gm));
      };
      int im1 = image_rank(1), t1 = bimod_dim(bimod_basis(1, g1.juxtapose(g1)));
      int im2 = image_rank(2), t2 = bimod_dim(bimod_basis(2, g1.juxtapose(g1)));
      if (im2 != t2) {
        detail = "T0 stage surjectivity failed at m=2";
        return false;
      }
      detail = "psd m<=2; T0 isometry; surjectivity: stage-1 image " +
               std::to_string(im1) + "/" + std::to_string(t1) +
               ", stage-2 " + std::to_string(im2) + "/" + std::to_string(t2);
    }
    return true;
  });

  // 11. Fusion ring
  criterion("fusion-ring", [](std::string& detail) {
    for (int nu : {3, 4, 5, 6}) {
      auto P = ParamContext::make(LoopParam::root_of_unity(nu));
      if (!verify_fusion_ring(P, 4).all()) {
        detail = "ring axioms failed at nu=" + std::to_string(nu);
        return false;
      }
    }
    if (!verify_fusion_ring(P4, 4).all()) return false;
    for (int nu : {4, 5}) {
      auto base = ParamContext::make(LoopParam::root_of_unity(nu));
      auto P = base->extend_sqrt(base->d);
      Scalar y = Scalar::sqrt_generator(P->F);
      AlgElem g1 = jw(1, P).extend(1);
      AlgElem q20 = minimal_projection(2, 0, P);
      AlgElem q22 = minimal_projection(2, 2, P);
      AlgElem q11 = jw(1, P);
      AlgElem w = jw(2, P) +
                  (g1 * AlgElem::gen(P, GenKind::e, 2, 1) * q20) * (y / P->d);
      GramForm gm = gram(2, 2, base);
      if (!(q20 * q22).is_zero()) return false;
      if (!radical_contains(w * w.star() - q11.juxtapose(q11), gm) ||
          !radical_contains(w.star() * w - (q20 + q22), gm)) {
        detail = "partial isometry oracle failed at nu=" + std::to_string(nu);
        return false;
      }
    }
    detail = "axioms at nu in {3,4,5,6} and D=4; ww*/w*w oracle at nu in {4,5}";
    return true;
  });

  // 12. End-to-end CLI verify, with byte-identical reruns
  criterion("cli-verify-small", [](std::string& detail) {
#ifdef MOTZKIN_CLI_PATH
    std::string base = std::string(MOTZKIN_CLI_PATH) +
                       " verify --suite all --bound small --seed 7";
    int rc1 = std::system((base + " > verify_run1.txt").c_str());
    int rc2 = std::system((base + " > verify_run2.txt").c_str());
    int same = std::system("cmp -s verify_run1.txt verify_run2.txt");
    std::remove("verify_run1.txt");
    std::remove("verify_run2.txt");
    detail = "exit 0 and byte-identical across runs";
    return rc1 == 0 && rc2 == 0 && same == 0;
#else
    detail = "CLI path not configured";
    return false;
#endif
  });

  std::printf("%s: %d/%d criteria passed\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              criterion_no - failures, criterion_no);
  return failures == 0 ? 0 : 1;
}
