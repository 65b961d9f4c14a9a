#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ps2c::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kNoPatterns = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics and human summaries to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ps2c::cli
