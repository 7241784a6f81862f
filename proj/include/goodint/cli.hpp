#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace goodint::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNotGood = 1,
    kUsage = 2,
    kInternal = 3,
};

// Runs one command line (without the program name). Normal output goes to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace goodint::cli
