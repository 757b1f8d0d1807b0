#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ternrep::cli {

/// Process exit codes.
enum ExitCode : int {
    kRepresentable = 0,
    kObstructed = 1,
    kOutsideCoveredCases = 2,
    kInternalError = 3,
    kUsageError = 4,
    kResourceCap = 5,
};

/// Runs one command line (without the program name).
int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ternrep::cli
