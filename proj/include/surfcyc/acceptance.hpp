#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfcyc {

struct CriterionResult {
    int index = 0;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

// Runs the nine release gates.  Exact comparisons unless a tolerance is
// pinned in the implementation; per-criterion wall-clock budgets are part
// of the pass condition.
std::vector<CriterionResult> run_acceptance(int jobs = 1);

// Prints one pass/fail line per criterion; returns 0 iff all pass.
int print_acceptance(std::ostream& out, int jobs = 1);

} // namespace surfcyc
