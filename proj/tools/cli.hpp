#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace condorcet::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResourceLimit = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace condorcet::cli
