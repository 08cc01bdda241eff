#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurst::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDataError = 2,
    kEstimationError = 3,
};

/// Runs the `hurst` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurst::cli
