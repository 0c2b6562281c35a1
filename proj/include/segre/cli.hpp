#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segre::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kSelfCheckMismatch = 3,
  kIrrationalEigenvalue = 4,
  kIoError = 5,
  kInvalidRankPattern = 6,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace segre::cli
