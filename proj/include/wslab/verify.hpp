#pragma once

#include <string>
#include <vector>

namespace wslab {

/* Outcome of one verification suite run. Violations are rendered with both
 * sides of the failed identity and sorted, so reports are deterministic
 * regardless of worker count. */
struct SuiteResult {
    std::string suite;
    int max_order = -1;  // -1 when the suite has no order parameter
    long checks = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

/* The available suites, in display order:
 * 4t, 1t, deframing, vanishing, lines, mm, multiplicativity, chord-choice,
 * oracle, identities. */
const std::vector<std::string>& suite_names();

/* Per-suite default order bound; -1 for suites without one (identities). */
int suite_default_max_order(const std::string& suite);

/* Run one suite up to max_order (<= 0 picks the default) with the given
 * worker count. Throws std::invalid_argument on an unknown suite name. */
SuiteResult run_suite(const std::string& suite, int max_order = 0, int jobs = 1);

}  // namespace wslab
