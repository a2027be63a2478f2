#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcone {

/// Exit codes of the command-line front-end.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // an order, residual or property check failed
  kExitInputError = 2,  // unreadable input, bad flags, or a failed membership test
};

/// Runs one command. `args` excludes the program name. Matrix payloads and
/// reports go to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jcone
