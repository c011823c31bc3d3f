#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singpoincare {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary when passing
};

// runs the full acceptance battery; deterministic (fixed seeds)
std::vector<CriterionResult> run_acceptance();

// prints one line per criterion ("criterion N name: PASS|FAIL detail") plus a
// summary line; returns a process exit code
int run_acceptance_main(std::ostream& out);

}  // namespace singpoincare
