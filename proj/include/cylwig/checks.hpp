#pragma once

#include <string>
#include <vector>

namespace cylwig {

struct CheckResult {
    std::string name;
    std::string suite;
    bool passed = false;
    double measured = 0.0;   // the quantity compared against the tolerance
    double tolerance = 0.0;
    std::string detail;
};

std::vector<std::string> available_suites();

/// Runs the identity/property suite. Empty filter runs everything; unknown
/// suite names throw ParameterError.
std::vector<CheckResult> run_checks(const std::vector<std::string>& suites = {});

}  // namespace cylwig
