#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddleech::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Exit codes: 0 success,
/// 1 verification or identity failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddleech::cli
