// Joint fixed-set dimensions for pairs of commuting reflection-type
// involutions, and verification that they stay at least 2 below the vcd
// lower bound.

#pragma once

#include "latdim/bounds.hpp"
#include "latdim/errors.hpp"
#include "latdim/groups.hpp"

#include <vector>

namespace latdim {

struct PairConfig {
    GroupSpec group; // SL_R or SO_pq
    // SO_pq only: signature (p', q') of the common (n-2)-dimensional piece,
    // p' + q' = p + q - 2, p' <= p, q' <= q.  SL_R has the single refinement
    // with dimensions (n-2, 1, 1) and carries no extra data.
    long p_prime = 0, q_prime = 0;
};

void validate_pair_config(const PairConfig& c);

/// Dimension of the joint fixed set of the commuting pair:
/// SL_R -> n(n-1)/2 + 2 - n;  SO_pq -> p'q'.
long pair_fixed_dim(const PairConfig& c);

struct PairReport {
    GroupSpec group;
    long vcd_bound = 0;
    long max_pair_dim = 0;
    PairConfig argmax;
    bool bound_holds = false; // max_pair_dim <= vcd_bound - 2
};

/// All valid refinements for the group.
std::vector<PairConfig> pair_configs(const GroupSpec& g);

/// Exhaustive check of pair_fixed_dim <= vcd_bound - 2 over all refinements.
/// Hypotheses: SL_R with n >= 4, or SO_pq with 2 <= p <= q and p + q >= 5;
/// throws HypothesisError otherwise.
PairReport verify_pair_bound(const GroupSpec& g);

std::vector<PairReport> verify_pair_bound(Family f, ParamRange n_or_p, ParamRange q = {});

} // namespace latdim
