// Acceptance gate: runs the ten self-verification criteria and prints one
// pass/fail line apiece plus a final verdict. Exit status 0 iff all pass.
#include "clusteraut/verify.hpp"

#include <cstdio>
#include <exception>

int main() {
    bool all = true;
    for (int id = 1; id <= 10; ++id) {
        try {
            for (const auto& r : clusteraut::run_criteria({id})) {
                std::puts(clusteraut::criterion_line(r).c_str());
                std::fflush(stdout);
                all = all && r.pass;
            }
        } catch (const std::exception& e) {
            std::fprintf(stderr, "criterion %d aborted: %s\n", id, e.what());
            all = false;
        }
    }
    std::puts(all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
    return all ? 0 : 1;
}
