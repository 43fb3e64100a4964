#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace walkcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kResourceLimit = 2,
  kUsage = 3,
};

// Runs one command. `args` excludes the program name. Results go to `out`
// (or to the --output file), errors to `err` as {"error": ...}.
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace walkcolor::cli
