#pragma once

#include <ostream>

namespace zipaut::cli {

/// Process exit codes of the `zipaut` tool.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,  // bad arguments, parse errors, malformed state or JSON
  kStuck = 3,
  kStepLimit = 4,
  kViolation = 5,
};

/// Runs the command line; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zipaut::cli
