// Catalog of the ten classical simple Lie group families: validity ranges,
// dimensions, maximal compact subgroups, symmetric-space dimensions, real
// ranks, and the induced lower bound dim S - rank for the virtual
// cohomological dimension of a lattice.
//
// All quantities are closed forms in the parameters; nothing is cached.

#pragma once

#include <stdexcept>
#include <string>

namespace latdim {

enum class Family {
    SL_C,    // SL(n,C),  n >= 2
    SO_C,    // SO(n,C),  n >= 3, n != 4
    Sp_C,    // Sp(2n,C), n >= 1   (parameter is n)
    SL_R,    // SL(n,R),  n >= 2
    SL_H,    // SL(n,H),  n >= 2
    SO_pq,   // SO(p,q),  1 <= p <= q, p+q >= 3
    SU_pq,   // SU(p,q),  1 <= p <= q, p+q >= 3
    Sp_pq,   // Sp(p,q),  1 <= p <= q, p+q >= 3
    Sp_R,    // Sp(2n,R), n >= 1   (parameter is n)
    SO_star, // SO*(2n),  n >= 2   (parameter is n)
};

bool family_uses_pq(Family f);

/// Canonical lowercase token, e.g. "sl_c", "so_pq", "so_star".
std::string family_token(Family f);

/// Display name with parameters left symbolic, e.g. "SL(n,R)".
std::string family_display(Family f);

/// Parse a family token (accepts "so_star" and "sostar"); throws on unknown.
Family family_from_token(const std::string& token);

struct GroupSpec {
    Family family = Family::SL_C;
    int n = 0; // n-parameter families
    int p = 0, q = 0; // (p,q) families

    /// Validated constructors; out-of-range parameters are rejected with
    /// std::invalid_argument naming the violated constraint.
    static GroupSpec make_n(Family f, int n);
    static GroupSpec make_pq(Family f, int p, int q);

    /// Display with concrete parameters, e.g. "SL(3,R)", "SO(2,3)", "SO*(8)".
    std::string display() const;

    bool operator==(const GroupSpec& o) const {
        return family == o.family && n == o.n && p == o.p && q == o.q;
    }
};

struct DimRecord {
    long dim_g = 0;  // real Lie group dimension
    long dim_k = 0;  // maximal compact subgroup
    long dim_s = 0;  // symmetric space G/K
    long rank_r = 0; // real rank
};

/// Dimension data for a valid spec, from the closed forms.
DimRecord dims(const GroupSpec& g);

/// dim S - rank_R: the lower bound for vcd of a lattice.
long vcd_lower_bound(const GroupSpec& g);

/// True iff the real rank is 1.
bool is_rank_one(const GroupSpec& g);

/// Name of the maximal compact subgroup, e.g. "SO_n" -> "SO(3)".
std::string maximal_compact_name(const GroupSpec& g);

} // namespace latdim
