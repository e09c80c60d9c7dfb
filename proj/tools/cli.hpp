#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gabor::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kRejected = 2, kInconclusive = 3 };

/// Runs one command line (without the program name); output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gabor::cli
