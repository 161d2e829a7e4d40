#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace concepts::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,  // validation failure, TooLarge, `compare --strict` disagreement
  kUsageError = 2,   // bad flags, unreadable or malformed files
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace concepts::cli
