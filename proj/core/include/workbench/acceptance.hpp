#pragma once

#include <string>
#include <vector>

namespace workbench {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;  // first failure, or a short summary
};

/// Runs the full acceptance suite.  Every bound and tolerance is pinned here.
std::vector<CriterionResult> run_acceptance(unsigned long long seed = 0);

/// Convenience: all criteria passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace workbench
