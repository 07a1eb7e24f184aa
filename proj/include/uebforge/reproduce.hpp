#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uebforge {

// One line of the reproduction report. measured is the headline deviation
// (or a violation count for verdict-style checks) compared against
// tolerance; pass additionally requires every subsidiary condition listed in
// detail, so pass can be false with measured <= tolerance if a side
// condition failed.
struct CheckResult {
  std::string name;
  std::string group;
  std::string detail;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
};

struct ReproOptions {
  double eps = 1e-9;
  double theta = 1e-3;
  std::uint64_t seed = 20240612;
  std::string only;  // when nonempty, run just the check with this name
};

// Check names in execution order. The randomized suites reseed per check,
// so a filtered run reproduces exactly the same numbers as the full run.
const std::vector<std::string>& reproduction_check_names();

// Runs the reproduction suite (all checks, or the one named in opts.only)
// and returns results in execution order. Unknown opts.only raises
// std::invalid_argument.
std::vector<CheckResult> run_reproduction(const ReproOptions& opts = {});

}  // namespace uebforge
