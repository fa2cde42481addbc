#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace budgetagg::cli {

enum ExitCode : int {
  kOk = 0,
  kDataError = 1,
  kUsageError = 2,
  kViolated = 3,  // axiom violated or witness found
  kBudgetExceeded = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace budgetagg::cli
