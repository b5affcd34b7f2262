#pragma once

#include "infharm/config.hpp"

#include <string>
#include <vector>

namespace infharm {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool upper_bound = true;  // pass means measured <= threshold (else >=)
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_text() const;
};

/// Runs the verification ladder for a configured map: profile bound check,
/// residual certification through both operator forms, finite-difference
/// cross-validation, phase agreement against the analytic sets (built-in
/// profiles only), the structure checks on the 1-D phase and the interface,
/// projection-jump probes, and the built-in non-solution control. Configs
/// with verify.expect = non_solution instead require the residual to stay
/// above the detection floor.
VerifyReport run_verification(const RunConfig& cfg, int threads = 1);

}  // namespace infharm
