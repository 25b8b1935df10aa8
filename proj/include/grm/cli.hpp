#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grm {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitValidation = 2,
  kExitNotEquivalent = 3,
  kExitBudget = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grm
