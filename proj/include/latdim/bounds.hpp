// Exhaustive maximization of the fixed-set dimension over all non-central
// patterns, comparison against the vcd lower bound, and classification of
// the maximizing patterns.

#pragma once

#include "latdim/groups.hpp"
#include "latdim/patterns.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace latdim {

/// Thrown when an enumeration would exceed the configured pattern ceiling.
/// Never truncates silently.
struct EnumerationGuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundsOptions {
    std::uint64_t max_patterns = 10'000'000;
    EnumOptions enum_opts;
};

enum class Verdict { STRICT_GAP, EQUALITY, EXCEEDS };

std::string verdict_name(Verdict v);

struct GapReport {
    GroupSpec group;
    long vcd_bound = 0;
    long max_fixed_dim = 0;
    long gap = 0; // vcd_bound - max_fixed_dim
    std::optional<long> closed_form_max; // predicted value, when known
    bool closed_form_agrees = true;      // false marks a hard verification error
    std::vector<EigenPattern> maximizers;
    std::uint64_t patterns_scanned = 0;
    Verdict verdict = Verdict::STRICT_GAP;
};

/// Exhaustive maximum of fixed_set_dim with all attaining patterns in
/// canonical order.  Throws EnumerationGuardExceeded past the ceiling.
std::pair<long, std::vector<EigenPattern>> max_fixed_dim(const GroupSpec& g,
                                                         const BoundsOptions& opts = {});

/// Closed form for the maximum where one is established: nullopt outside the
/// validity range of the formula.
std::optional<long> closed_form_max(const GroupSpec& g);

struct ParamRange {
    int lo = 0, hi = 0; // inclusive
};

/// Gap reports across a parameter sweep.  For n-families the range is n;
/// for (p,q) families both ranges are given and all valid combinations with
/// p <= q are swept.
std::vector<GapReport> verify_gap(Family f, ParamRange n_or_p, ParamRange q = {},
                                  const BoundsOptions& opts = {});

/// Single-group report.
GapReport gap_report(const GroupSpec& g, const BoundsOptions& opts = {});

} // namespace latdim
