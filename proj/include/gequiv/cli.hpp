#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gequiv::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kValidationError = 3,
  kBudgetExceeded = 4,
};

/// Entry point of the `gequiv` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gequiv::cli
