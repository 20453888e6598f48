#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motzkin/param.hpp"

namespace motzkin {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Known discrepancies in the source formulas are reported as structured
// flags, never as silent corrections and never as failures.
struct FlagRecord {
  std::string what;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<FlagRecord> flags;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  bool full = false;  // --bound {small,full}
  uint64_t seed = 1;
  LoopParam user_param = LoopParam::rational(Rat(4));
};

VerifyReport verify_scalars(const VerifyOptions& opt);
VerifyReport verify_tangles(const VerifyOptions& opt);
VerifyReport verify_algebra(const VerifyOptions& opt);
VerifyReport verify_idempotents(const VerifyOptions& opt);
VerifyReport verify_towers(const VerifyOptions& opt);
VerifyReport verify_bimodules(const VerifyOptions& opt);

// suite in {scalars, tangles, algebra, idempotents, towers, bimodules, all}
VerifyReport verify_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace motzkin
