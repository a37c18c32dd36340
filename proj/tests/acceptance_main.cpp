// Runs every pinned verification suite and prints one PASS/FAIL line each.
// Exit status is nonzero when any suite fails its checks or its time budget.
#include <iomanip>
#include <iostream>
#include <string>

#include "arbor/verify.hpp"

int main() {
    bool all_passed = true;
    int count = 0;
    for (const std::string& name : arbor::check_names()) {
        const arbor::CheckResult r = arbor::run_check(name);
        all_passed = all_passed && r.passed;
        ++count;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed
                  << std::setprecision(2) << r.seconds << "s of " << std::setprecision(0)
                  << r.budget_seconds << "s budget)";
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << std::endl;
    }
    std::cout << (all_passed ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << count
              << " suites)" << std::endl;
    return all_passed ? 0 : 1;
}
