#pragma once

#include <iosfwd>
#include <istream>

namespace mtasep {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitSolver = 3,
  kExitSimulation = 4,
};

/// Runs the tool with the given arguments; `in` backs "-" and missing file
/// arguments. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mtasep
