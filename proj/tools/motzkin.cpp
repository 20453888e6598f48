#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "motzkin/algebra.hpp"
#include "motzkin/bimodule.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/gram.hpp"
#include "motzkin/idempotents.hpp"
#include "motzkin/towers.hpp"
#include "motzkin/verify.hpp"

using namespace motzkin;

namespace {

int max_points() {
  if (const char* env = std::getenv("MOTZKIN_MAX_POINTS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 18;
}

std::pair<int, int> parse_shape(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw ParseError("--shape expects m,n");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

ParamPtr make_param(const std::string& spec) {
  return ParamContext::make(LoopParam::parse(spec));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Motzkin diagram algebra M_n(D)"};
  app.require_subcommand(1);

  std::string dspec = "4", format = "text";
  app.add_option("--format", format, "text|json")->capture_default_str();

  // count
  auto* count_cmd = app.add_subcommand("count", "Motzkin numbers");
  int count_upto = 7;
  count_cmd->add_option("--upto", count_upto)->capture_default_str();

  // enum
  auto* enum_cmd = app.add_subcommand("enum", "enumerate (m,n)-tangles");
  std::string enum_shape = "2,2";
  enum_cmd->add_option("--shape", enum_shape)->capture_default_str();

  // mul / trace
  auto* mul_cmd = app.add_subcommand("mul", "evaluate a word in M_n(D)");
  auto* trace_cmd = app.add_subcommand("trace", "trace of a word in M_n(D)");
  int word_n = 2;
  std::string word;
  for (auto* c : {mul_cmd, trace_cmd}) {
    c->add_option("--n", word_n, "strand count")->capture_default_str();
    c->add_option("--D", dspec)->capture_default_str();
    c->add_option("word", word, "e.g. \"e1*l2\"")->required();
  }

  // gram
  auto* gram_cmd = app.add_subcommand("gram", "Gram form of M(m,n)");
  std::string gram_shape = "2,2", gram_emit = "rank";
  gram_cmd->add_option("--shape", gram_shape)->capture_default_str();
  gram_cmd->add_option("--D", dspec)->capture_default_str();
  gram_cmd->add_option("--emit", gram_emit, "rank|matrix")
      ->capture_default_str();

  // jw
  auto* jw_cmd = app.add_subcommand("jw", "idempotent g_k");
  int jw_k = 2;
  bool jw_verify = false;
  jw_cmd->add_option("--k", jw_k)->capture_default_str();
  jw_cmd->add_option("--D", dspec)->capture_default_str();
  jw_cmd->add_flag("--verify", jw_verify, "run the five-item report");

  // units
  auto* units_cmd = app.add_subcommand("units", "matrix-unit systems");
  int units_n = 2;
  units_cmd->add_option("--n", units_n)->capture_default_str();
  units_cmd->add_option("--D", dspec)->capture_default_str();

  // bratteli
  auto* brat_cmd = app.add_subcommand("bratteli", "Bratteli diagram data");
  int brat_depth = 6;
  std::string brat_dot;
  brat_cmd->add_option("--depth", brat_depth)->capture_default_str();
  brat_cmd->add_option("--D", dspec)->capture_default_str();
  brat_cmd->add_option("--dot", brat_dot, "write DOT to this path");

  // dims
  auto* dims_cmd = app.add_subcommand("dims", "dim H_k table");
  int dims_upto = 8;
  std::string dims_emit = "text";
  dims_cmd->add_option("--upto", dims_upto)->capture_default_str();
  dims_cmd->add_option("--D", dspec)->capture_default_str();
  dims_cmd->add_option("--emit", dims_emit, "text|csv")->capture_default_str();

  // gf
  auto* gf_cmd = app.add_subcommand("gf", "resolvent series coefficients");
  int gf_nu = 4, gf_n = 12;
  gf_cmd->add_option("--nu", gf_nu)->capture_default_str();
  gf_cmd->add_option("--N", gf_n)->capture_default_str();

  // commutant
  auto* comm_cmd = app.add_subcommand("commutant", "relative commutant table");
  int comm_k = 3;
  comm_cmd->add_option("--k", comm_k)->capture_default_str();
  comm_cmd->add_option("--D", dspec)->capture_default_str();

  // bimod
  auto* bimod_cmd = app.add_subcommand("bimod", "finite-stage bimodule data");
  int bimod_m = 1;
  std::string bimod_p = "g1";
  bool bimod_report = false;
  bimod_cmd->add_option("--m", bimod_m)->capture_default_str();
  bimod_cmd->add_option("--p", bimod_p, "word for the idempotent")
      ->capture_default_str();
  bimod_cmd->add_option("--D", dspec)->capture_default_str();
  bimod_cmd->add_flag("--report", bimod_report);

  // fuse
  auto* fuse_cmd = app.add_subcommand("fuse", "fusion products");
  std::string fuse_expr;
  fuse_cmd->add_option("--D", dspec)->capture_default_str();
  fuse_cmd->add_option("expr", fuse_expr, "\"k,i x l,j\"")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "property suites");
  std::string suite = "all", bound = "small";
  uint64_t seed = 1;
  verify_cmd->add_option("--suite", suite)->capture_default_str();
  verify_cmd->add_option("--bound", bound, "small|full")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--D", dspec)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count_cmd) {
      for (int k = 0; k <= count_upto; ++k)
        std::cout << (k ? " " : "") << count_motzkin(k).get_str();
      std::cout << "\n";
      return 0;
    }

    if (*enum_cmd) {
      auto [m, n] = parse_shape(enum_shape);
      auto tangles = enumerate_tangles(m, n, max_points());
      if (format == "json") {
        std::cout << "[";
        for (size_t i = 0; i < tangles.size(); ++i)
          std::cout << (i ? "," : "") << tangles[i].json();
        std::cout << "]\n";
      } else if (format == "dot") {
        for (size_t i = 0; i < tangles.size(); ++i)
          std::cout << tangles[i].dot("t" + std::to_string(i));
      } else {
        for (const auto& t : tangles) std::cout << t.compact() << "\n";
      }
      return 0;
    }

    if (*mul_cmd || *trace_cmd) {
      auto P = make_param(dspec);
      AlgElem e = parse_word(word, word_n, P);
      if (*mul_cmd)
        std::cout << (format == "json" ? e.json() : e.str()) << "\n";
      else {
        Scalar t = e.trace();
        std::cout << (format == "json" ? t.json() : t.str()) << "\n";
      }
      return 0;
    }

    if (*gram_cmd) {
      auto [m, n] = parse_shape(gram_shape);
      auto g = gram(m, n, make_param(dspec), max_points());
      if (gram_emit == "rank")
        std::cout << gram_rank(g) << "\n";
      else if (gram_emit == "matrix")
        std::cout << g.json() << "\n";
      else
        throw ParseError("--emit must be rank or matrix");
      return 0;
    }

    if (*jw_cmd) {
      auto P = make_param(dspec);
      if (!jw_verify) {
        AlgElem g = jw(jw_k, P);
        std::cout << (format == "json" ? g.json() : g.str()) << "\n";
        return 0;
      }
      auto rep = verify_jw(jw_k, P);
      auto line = [](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
      };
      line("annihilation(e_i,l_i,r_i | i<k)", rep.annihilation);
      line("self-adjoint idempotent", rep.projection);
      line("conditional expectation ratio", rep.expectation);
      line("absorption g_i g_k = g_k", rep.absorption);
      line("unit coefficient", rep.unit_coefficient);
      std::cout << "tr(g_" << jw_k << ") = " << rep.trace.str() << "\n";
      return rep.all() ? 0 : 1;
    }

    if (*units_cmd) {
      auto P = make_param(dspec);
      auto fam = matrix_units(units_n, P);
      auto g = gram(units_n, units_n, P);
      auto r = verify_matrix_units(fam, g);
      std::cout << "family: n=" << units_n << " blocks=";
      for (size_t i = 0; i < fam.block_sizes.size(); ++i)
        std::cout << (i ? "," : "") << fam.block_sizes[i];
      std::cout << " units=" << fam.units.size() << "\n";
      std::cout << "checked " << r.checked << " products; exact defects "
                << r.exact_defects << "; defects mod radical "
                << r.radical_defects << "\n";
      return r.pass_mod_radical() ? 0 : 1;
    }

    if (*brat_cmd) {
      auto b = bratteli(LoopParam::parse(dspec), brat_depth);
      if (!brat_dot.empty()) {
        std::ofstream out(brat_dot);
        out << b.dot();
      }
      if (format == "json") {
        std::cout << b.json() << "\n";
      } else {
        for (size_t k = 0; k < b.levels.size(); ++k) {
          std::cout << "level " << k << ":";
          for (const auto& d : b.levels[k]) std::cout << " " << d.get_str();
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*dims_cmd) {
      LoopParam param = LoopParam::parse(dspec);
      auto P = ParamContext::make(param);
      const bool root = param.kind() == LoopParam::Kind::RootOfUnity;
      const char* sep = dims_emit == "csv" ? "," : "  ";
      std::cout << "k" << sep << "closed_form" << sep << "gram_rank" << sep
                << "match\n";
      bool all_match = true;
      for (int k = 0; k <= dims_upto; ++k) {
        Int closed = root ? dim_closed_form(k, param.nu()) : count_motzkin(k);
        Int rank = gns_dim(k, P, max_points());
        bool match = closed == rank;
        all_match = all_match && match;
        std::cout << k << sep << closed.get_str() << sep << rank.get_str()
                  << sep << (match ? "yes" : "NO") << "\n";
      }
      return all_match ? 0 : 1;
    }

    if (*gf_cmd) {
      auto cmp = gf_chebyshev_comparison(gf_nu, gf_n);
      std::cout << "resolvent:";
      for (const auto& c : cmp.resolvent) std::cout << " " << c.get_str();
      std::cout << "\n";
      if (cmp.first_mismatch < 0) {
        std::cout << "chebyshev-ratio series agrees up to N\n";
      } else {
        std::cout << "flag: chebyshev-ratio series P_" << gf_nu - 1 << "/P_"
                  << gf_nu << " deviates at x^" << cmp.first_mismatch << " ("
                  << cmp.resolvent[cmp.first_mismatch].get_str() << " vs "
                  << rat_str(cmp.chebyshev_ratio[cmp.first_mismatch])
                  << ")\n";
      }
      return 0;
    }

    if (*comm_cmd) {
      LoopParam param = LoopParam::parse(dspec);
      if (param.kind() != LoopParam::Kind::Rational)
        throw DomainError("commutant tables need a rational D >= 3");
      auto table = commutant_table(comm_k, param.value());
      std::cout << "k=" << table.k << " blocks=" << table.blocks.size()
                << " q=" << table.q.str() << "\n";
      for (const auto& b : table.blocks) {
        std::cout << "(" << b.i << "," << b.j << "," << b.l << ") dim "
                  << b.dim.get_str() << " weight " << b.weight.str()
                  << " D_power_weight " << b.d_power_weight.str() << "\n";
      }
      std::cout << "flag: the q^(j-l) weights sum to 1 against the 1,q,q^-1 "
                   "state; the literal D-power column is shown for "
                   "comparison only\n";
      return 0;
    }

    if (*bimod_cmd) {
      auto P = make_param(dspec);
      // the idempotent's strand count is the largest generator index used;
      // parse with increasing n until it fits
      AlgElem p = AlgElem::identity(P, 0);
      bool parsed = false;
      std::string perr;
      for (int n = 0; n <= 6 && !parsed; ++n) {
        try {
          p = parse_word(bimod_p, n, P);
          parsed = true;
        } catch (const MotzkinError& e) {
          perr = e.what();
        }
      }
      if (!parsed) throw ParseError("cannot parse --p: " + perr);
      auto space = bimod_basis(bimod_m, p, max_points());
      auto gm = bimod_gram(space);
      int rank = matrix_rank(gm);
      std::cout << "V_" << bimod_m << "(p): spanning " << space.basis.size()
                << " vectors, stage dimension " << rank << "\n";
      if (bimod_report) {
        bool psd = matrix_psd(gm);
        bool commute = true;
        std::vector<AlgElem> mm;
        for (const auto& t : enumerate_tangles(bimod_m, bimod_m))
          mm.push_back(AlgElem::from_tangle(P, t));
        for (const auto& v : space.basis)
          for (const auto& a : mm)
            for (const auto& b : mm)
              if (!(act_left(a, act_right(v, b)) ==
                    act_right(act_left(a, v), b)))
                commute = false;
        std::cout << "gram psd: " << (psd ? "yes" : "NO") << "\n";
        std::cout << "actions commute: " << (commute ? "yes" : "NO") << "\n";
        return psd && commute ? 0 : 1;
      }
      return 0;
    }

    if (*fuse_cmd) {
      auto P = make_param(dspec);
      auto xpos = fuse_expr.find('x');
      if (xpos == std::string::npos)
        throw ParseError("fuse expects \"k,i x l,j\"");
      auto [ka, ia] = parse_shape(fuse_expr.substr(0, xpos));
      auto [kb, ib] = parse_shape(fuse_expr.substr(xpos + 1));
      auto out = fuse({ka, ia}, {kb, ib}, P);
      std::cout << "[";
      for (size_t i = 0; i < out.size(); ++i) {
        std::cout << (i ? "," : "") << "{\"k\":" << out[i].k
                  << ",\"i\":" << out[i].i << "}";
      }
      std::cout << "]\n";
      return 0;
    }

    if (*verify_cmd) {
      VerifyOptions opt;
      opt.full = bound == "full";
      if (bound != "full" && bound != "small")
        throw ParseError("--bound must be small or full");
      opt.seed = seed;
      opt.user_param = LoopParam::parse(dspec);
      auto rep = verify_suite(suite, opt);
      for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
      }
      for (const auto& f : rep.flags)
        std::cout << "FLAG " << f.what << ": " << f.detail << "\n";
      std::cout << (rep.all_pass() ? "all checks passed"
                                   : "verification FAILED")
                << " (" << rep.checks.size() << " checks)\n";
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const GenericityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MotzkinError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
