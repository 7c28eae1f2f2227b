#pragma once

#include <iosfwd>
#include <string>

namespace lpa {

inline constexpr const char* kToolName = "lpa-lie";
inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitDisagreement = 1,
  kExitParseError = 2,
  kExitInvalidRequest = 3,
};

/// Runs `analyze`, `eval` or `oracle-compare` and returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpa
