#pragma once

#include <string>
#include <vector>

namespace mpa {

struct GoldenResult {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure
};

/// The worked examples and headline numbers, reproduced end to end.  Used by
/// `mpalg repro` and by the acceptance suite.
std::vector<GoldenResult> run_golden_checks();

}  // namespace mpa
