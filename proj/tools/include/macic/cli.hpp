#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macic::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyViolation = 1,
  kMalformedInput = 2,
  kInfeasibleConfig = 3,
};

/// Runs one subcommand. args excludes the program name. Reports go to `out`
/// unless --out names a directory, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macic::cli
