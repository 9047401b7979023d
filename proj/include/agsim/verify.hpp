#pragma once

#include <string>
#include <vector>

#include "agsim/types.hpp"

namespace agsim {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status;
  double max_dev; // worst deviation observed
  double tol;     // threshold it was held against
  std::string note;
};

struct VerifyOptions {
  int n_min = 2;
  int n_max = 6;
  double energy = 1.0;
  int grid_steps = 1000;
  double log_base = 2.0;
  unsigned long seed = 12345;
  double integrator_dt = 0.0;     // 0 selects the integrator default
  double error_injection = 0.0;   // test hook, forwarded to the integrator
};

/// Runs every closed-form-vs-oracle and invariant check at the configured
/// sizes. Checks that need structure absent at a given n are skipped, not
/// failed.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

/// Fixed-width table, one line per check plus a summary line.
std::string format_check_table(const std::vector<CheckResult>& results);

} // namespace agsim
