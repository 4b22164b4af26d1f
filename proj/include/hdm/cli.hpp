#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdm::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kHypothesis = 3,
};

/// Runs one invocation. `args` excludes the program name. Payloads and
/// check results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdm::cli
