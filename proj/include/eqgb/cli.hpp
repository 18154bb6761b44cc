#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqgb {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitBudgetExhausted = 2,
  kExitFalse = 3,
};

/// Runs the command line `args` (args[0] is the program name). Documents go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqgb
