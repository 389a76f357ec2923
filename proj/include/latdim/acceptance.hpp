// End-to-end verification suite: one line per criterion, exact thresholds.
// Shared by the acceptance test binary and the CLI `selftest` subcommand.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latdim {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    bool informational = false; // notes that do not gate the run
    std::string detail;
    double ms = 0;
};

/// Runs all criteria, streaming one result line per criterion to `log`.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

/// Number of failed gating criteria.
int acceptance_failures(const std::vector<CriterionResult>& results);

} // namespace latdim
