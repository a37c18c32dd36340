#pragma once

#include <string>
#include <vector>

namespace arbor {

// One self-contained verification suite: exact checks with pinned expected
// values and fixed seeds, plus a wall-clock budget the suite must beat.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;     // counts, mismatches, counterexamples
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

std::vector<std::string> check_names();

// Throws DomainError for an unknown name.
CheckResult run_check(const std::string& name);

std::vector<CheckResult> run_all_checks();

}  // namespace arbor
