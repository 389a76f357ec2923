#include "latdim/pairs.hpp"

#include <algorithm>

namespace latdim {

void validate_pair_config(const PairConfig& c) {
    if (c.group.family == Family::SL_R) {
        if (c.p_prime != 0 || c.q_prime != 0)
            throw std::invalid_argument("SL_R pair refinement carries no signature data");
        return;
    }
    if (c.group.family == Family::SO_pq) {
        const long p = c.group.p, q = c.group.q;
        if (c.p_prime < 0 || c.q_prime < 0 || c.p_prime > p || c.q_prime > q ||
            c.p_prime + c.q_prime != p + q - 2)
            throw std::invalid_argument("SO_pq refinement needs p'+q' = p+q-2, p' <= p, q' <= q");
        return;
    }
    throw std::invalid_argument("pair bounds are defined for SL_R and SO_pq only");
}

long pair_fixed_dim(const PairConfig& c) {
    validate_pair_config(c);
    if (c.group.family == Family::SL_R) {
        const long n = c.group.n;
        return n * (n - 1) / 2 + 2 - n;
    }
    return c.p_prime * c.q_prime;
}

std::vector<PairConfig> pair_configs(const GroupSpec& g) {
    std::vector<PairConfig> out;
    if (g.family == Family::SL_R) {
        out.push_back({g, 0, 0});
        return out;
    }
    if (g.family != Family::SO_pq)
        throw std::invalid_argument("pair bounds are defined for SL_R and SO_pq only");
    const long p = g.p, q = g.q;
    for (long pp = std::max(0L, p - 2); pp <= p; ++pp) {
        const long qq = p + q - 2 - pp;
        if (qq < 0 || qq > q) continue;
        out.push_back({g, pp, qq});
    }
    return out;
}

PairReport verify_pair_bound(const GroupSpec& g) {
    if (g.family == Family::SL_R) {
        if (g.n < 4) throw HypothesisError("pair bound for SL(n,R) requires n >= 4");
    } else if (g.family == Family::SO_pq) {
        if (g.p < 2) throw HypothesisError("pair bound for SO(p,q) requires 2 <= p <= q");
        if (g.p + g.q < 5) throw HypothesisError("pair bound for SO(p,q) requires p + q >= 5");
    } else {
        throw std::invalid_argument("pair bounds are defined for SL_R and SO_pq only");
    }
    PairReport r;
    r.group = g;
    r.vcd_bound = vcd_lower_bound(g);
    bool any = false;
    for (const PairConfig& c : pair_configs(g)) {
        const long d = pair_fixed_dim(c);
        if (!any || d > r.max_pair_dim) {
            any = true;
            r.max_pair_dim = d;
            r.argmax = c;
        }
    }
    r.bound_holds = r.max_pair_dim <= r.vcd_bound - 2;
    return r;
}

std::vector<PairReport> verify_pair_bound(Family f, ParamRange n_or_p, ParamRange q) {
    std::vector<PairReport> out;
    if (f == Family::SL_R) {
        for (int nn = n_or_p.lo; nn <= n_or_p.hi; ++nn)
            out.push_back(verify_pair_bound(GroupSpec::make_n(f, nn)));
        return out;
    }
    if (f != Family::SO_pq)
        throw std::invalid_argument("pair bounds are defined for SL_R and SO_pq only");
    if (q.hi == 0 && q.lo == 0) q = n_or_p;
    for (int pp = n_or_p.lo; pp <= n_or_p.hi; ++pp)
        for (int qq = std::max(pp, q.lo); qq <= q.hi; ++qq) {
            if (pp < 1 || pp > qq || pp + qq < 3) continue;
            if (pp < 2 || pp + qq < 5) continue; // outside the hypothesis
            out.push_back(verify_pair_bound(GroupSpec::make_pq(f, pp, qq)));
        }
    return out;
}

} // namespace latdim
