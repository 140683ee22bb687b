// Invariant suite run by the `selfcheck` command: every property is checked
// exhaustively up to a size bound.
#pragma once

#include <string>
#include <vector>

namespace cusp_atlas {

struct PropertyResult {
    std::string name;
    bool passed = true;
    long cases = 0;       // number of inputs examined
    std::string detail;   // first counterexample, empty when passed
};

std::vector<PropertyResult> run_selfcheck(int bound);

}  // namespace cusp_atlas
