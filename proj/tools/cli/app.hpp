#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ricefn::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kNumerical = 3,       ///< non-convergence or overflow
    kBoundViolation = 4,  ///< audit found a margin below -1e-12
};

/// Runs the command line `ricefn <args...>` (args excludes the program name)
/// writing normal output to out and diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ricefn::cli
