#include "latdim/bounds.hpp"

#include <algorithm>

namespace latdim {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::STRICT_GAP: return "STRICT_GAP";
        case Verdict::EQUALITY: return "EQUALITY";
        case Verdict::EXCEEDS: return "EXCEEDS";
    }
    return "?";
}

std::pair<long, std::vector<EigenPattern>> max_fixed_dim(const GroupSpec& g,
                                                         const BoundsOptions& opts) {
    PatternStream stream(g, opts.enum_opts);
    std::uint64_t scanned = 0;
    bool any = false;
    long best = 0;
    std::vector<EigenPattern> argmax;
    while (auto pat = stream.next()) {
        if (++scanned > opts.max_patterns)
            throw EnumerationGuardExceeded("pattern enumeration for " + g.display() +
                                           " exceeds ceiling of " +
                                           std::to_string(opts.max_patterns));
        const long d = fixed_set_dim(g, *pat);
        if (!any || d > best) {
            any = true;
            best = d;
            argmax.clear();
            argmax.push_back(std::move(*pat));
        } else if (d == best) {
            argmax.push_back(std::move(*pat));
        }
    }
    if (!any)
        throw std::invalid_argument("no non-central pattern exists for " + g.display());
    std::sort(argmax.begin(), argmax.end());
    return {best, std::move(argmax)};
}

std::optional<long> closed_form_max(const GroupSpec& g) {
    const long n = g.n, p = g.p, q = g.q;
    switch (g.family) {
        case Family::SL_C: return (n - 1) * (n - 1);
        case Family::SO_C:
            if (n < 5) return std::nullopt;
            return (n - 1) * (n - 2) / 2;
        case Family::Sp_C:
            if (n < 2) return std::nullopt;
            return 2 * n * n - 3 * n + 4;
        case Family::SL_R: return n * (n - 1) / 2;
        case Family::SL_H:
            if (n < 3) return std::nullopt;
            return 2 * n * n - 5 * n + 3;
        case Family::SO_pq: return p * (q - 1);
        case Family::SU_pq:
            if (p < 2) return std::nullopt;
            return 2 * p * (q - 1);
        case Family::Sp_pq:
            if (p < 2) return std::nullopt;
            return 4 * p * (q - 1);
        case Family::Sp_R:
            if (n < 3) return std::nullopt;
            return n * n - n + 2;
        case Family::SO_star: return (n - 1) * (n - 2);
    }
    return std::nullopt;
}

GapReport gap_report(const GroupSpec& g, const BoundsOptions& opts) {
    GapReport r;
    r.group = g;
    r.vcd_bound = vcd_lower_bound(g);

    PatternStream stream(g, opts.enum_opts);
    std::uint64_t scanned = 0;
    bool any = false;
    while (auto pat = stream.next()) {
        if (++scanned > opts.max_patterns)
            throw EnumerationGuardExceeded("pattern enumeration for " + g.display() +
                                           " exceeds ceiling of " +
                                           std::to_string(opts.max_patterns));
        const long d = fixed_set_dim(g, *pat);
        if (!any || d > r.max_fixed_dim) {
            any = true;
            r.max_fixed_dim = d;
            r.maximizers.clear();
            r.maximizers.push_back(std::move(*pat));
        } else if (d == r.max_fixed_dim) {
            r.maximizers.push_back(std::move(*pat));
        }
    }
    if (!any)
        throw std::invalid_argument("no non-central pattern exists for " + g.display());
    std::sort(r.maximizers.begin(), r.maximizers.end());
    r.patterns_scanned = scanned;
    r.gap = r.vcd_bound - r.max_fixed_dim;
    r.verdict = r.gap > 0 ? Verdict::STRICT_GAP : (r.gap == 0 ? Verdict::EQUALITY : Verdict::EXCEEDS);
    r.closed_form_max = closed_form_max(g);
    r.closed_form_agrees = !r.closed_form_max || *r.closed_form_max == r.max_fixed_dim;
    return r;
}

std::vector<GapReport> verify_gap(Family f, ParamRange n_or_p, ParamRange q,
                                  const BoundsOptions& opts) {
    std::vector<GapReport> out;
    if (family_uses_pq(f)) {
        if (q.hi == 0 && q.lo == 0) q = n_or_p;
        for (int pp = n_or_p.lo; pp <= n_or_p.hi; ++pp)
            for (int qq = std::max(pp, q.lo); qq <= q.hi; ++qq) {
                if (pp < 1 || pp > qq || pp + qq < 3) continue;
                out.push_back(gap_report(GroupSpec::make_pq(f, pp, qq), opts));
            }
    } else {
        for (int nn = n_or_p.lo; nn <= n_or_p.hi; ++nn) {
            GroupSpec g;
            try {
                g = GroupSpec::make_n(f, nn);
            } catch (const std::invalid_argument&) {
                continue; // skip out-of-range parameters in sweeps
            }
            out.push_back(gap_report(g, opts));
        }
    }
    return out;
}

} // namespace latdim
