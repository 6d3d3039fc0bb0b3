#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relcoh::cli {

enum ExitCode : int {
    kOk = 0,
    kParseFailure = 1, // unreadable or malformed input, bad command line
    kTopologyFailure = 2, // input is not a valid surface, or an internal invariant broke
    kVerificationFailure = 3,
};

/// Runs the command line tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace relcoh::cli
