#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ado {

/// Exit codes of the ado-forge command line.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,
  kExitParse = 2,
  kExitNotNilpotent = 3,
  kExitBudget = 4,
};

/// Runs one ado-forge invocation. `args` includes the program name. Data goes
/// to `out`; a one-line JSON run report goes to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ado
