#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spx {

enum ExitCode : int {
  kExitOk = 0,
  kExitParam = 1,
  kExitFormat = 2,
  kExitVerificationFailed = 3,
};

/// Runs one command line (without the program name). Documents go to out, diagnostics to err;
/// graph input named "-" is read from in. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spx
