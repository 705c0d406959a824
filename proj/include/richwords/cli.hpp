#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace richwords::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPredicateFalse = 1,  // e.g. `rich` on a non-rich word
  kUsageError = 2,
  kPreconditionError = 3,
  kVerificationFailure = 4,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; diagnostics go to `err` only.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace richwords::cli
