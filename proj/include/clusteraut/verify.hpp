#pragma once
//
// Self-verification suite: ten independently checkable statements about the
// engine, each with a fixed wall-clock budget, run deterministically (fixed
// RNG seeds). Used by the acceptance binary and the `verify` tool verb.
//
#include "clusteraut/classify.hpp"

#include <string>
#include <vector>

namespace clusteraut {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;       // summary, or the first failure
    long long ms = 0;         // measured wall time
    long long budget_ms = 0;  // pinned budget; exceeding it fails the criterion
};

// Runs the selected criteria in order (ids from 1 to 10; empty = all).
// input_error on an unknown id.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids = {});

// "criterion  7 PASS [ 423 ms <= 600000 ms] grid classification ... detail"
std::string criterion_line(const CriterionResult& r);

}  // namespace clusteraut
