#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace enumkit {

// Exit codes of the command-line front end.
//   0 success, 2 parse error, 3 validation error, 4 verification mismatch,
//   5 budget exceeded, 1 anything else.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitVerifyMismatch = 4,
  kExitBudget = 5,
};

struct RunConfig {
  std::string problem;              // union | dnf | gray | dagpaths | gf2
  std::string method = "default";   // flashlight | supergraph | reverse | saturate | default
  std::string amortize = "none";    // none | queue | geometric | adaptive | epsilon
  std::optional<uint64_t> limit;
  std::optional<uint64_t> seed;
  bool stats = false;
  bool verify = false;
  bool order_check = false;
  std::optional<uint64_t> incremental_delay;  // p for the amortizers
  std::optional<uint64_t> solution_bound;     // count bound for the geometric amortizer
  double epsilon = 0.5;
  uint64_t step_budget = 1'000'000'000;       // ENUM_STEP_BUDGET overrides
};

// Run the command line (argv without the program name). Solutions stream to
// `out`, one per line; reports go to `err` as key=value lines.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enumkit
