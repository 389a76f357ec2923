// Acceptance suite entry point: prints one line per criterion and exits
// nonzero if any gating criterion fails.

#include "latdim/acceptance.hpp"

#include <iostream>

int main() {
    const auto results = latdim::run_acceptance(std::cout);
    const int fails = latdim::acceptance_failures(results);
    if (fails > 0) std::cout << fails << " criterion(s) failed\n";
    return fails > 0 ? 1 : 0;
}
