#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace procrec::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kInternalError = 2 };

/// Runs the `procrec` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace procrec::cli
