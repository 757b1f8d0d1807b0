#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace ternrep {

struct SelftestResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Reduced-range versions of the library invariants; fast enough to run
/// from the command line.
std::vector<SelftestResult> run_selftest();

}  // namespace ternrep
