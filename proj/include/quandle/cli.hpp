#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quandle {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
};

/// Runs one CLI invocation (args exclude the program name) and writes a
/// single JSON report line to `out`. Help text goes to `out` as plain text.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace quandle
