#include "latdim/groups.hpp"

namespace latdim {

bool family_uses_pq(Family f) {
    return f == Family::SO_pq || f == Family::SU_pq || f == Family::Sp_pq;
}

std::string family_token(Family f) {
    switch (f) {
        case Family::SL_C: return "sl_c";
        case Family::SO_C: return "so_c";
        case Family::Sp_C: return "sp_c";
        case Family::SL_R: return "sl_r";
        case Family::SL_H: return "sl_h";
        case Family::SO_pq: return "so_pq";
        case Family::SU_pq: return "su_pq";
        case Family::Sp_pq: return "sp_pq";
        case Family::Sp_R: return "sp_r";
        case Family::SO_star: return "so_star";
    }
    return "?";
}

std::string family_display(Family f) {
    switch (f) {
        case Family::SL_C: return "SL(n,C)";
        case Family::SO_C: return "SO(n,C)";
        case Family::Sp_C: return "Sp(2n,C)";
        case Family::SL_R: return "SL(n,R)";
        case Family::SL_H: return "SL(n,H)";
        case Family::SO_pq: return "SO(p,q)";
        case Family::SU_pq: return "SU(p,q)";
        case Family::Sp_pq: return "Sp(p,q)";
        case Family::Sp_R: return "Sp(2n,R)";
        case Family::SO_star: return "SO*(2n)";
    }
    return "?";
}

Family family_from_token(const std::string& token) {
    if (token == "sl_c" || token == "slc") return Family::SL_C;
    if (token == "so_c" || token == "soc") return Family::SO_C;
    if (token == "sp_c" || token == "spc") return Family::Sp_C;
    if (token == "sl_r" || token == "slr") return Family::SL_R;
    if (token == "sl_h" || token == "slh") return Family::SL_H;
    if (token == "so_pq" || token == "sopq") return Family::SO_pq;
    if (token == "su_pq" || token == "supq") return Family::SU_pq;
    if (token == "sp_pq" || token == "sppq") return Family::Sp_pq;
    if (token == "sp_r" || token == "spr") return Family::Sp_R;
    if (token == "so_star" || token == "sostar") return Family::SO_star;
    throw std::invalid_argument("unknown family token: '" + token + "'");
}

GroupSpec GroupSpec::make_n(Family f, int n) {
    if (family_uses_pq(f))
        throw std::invalid_argument(family_display(f) + " takes parameters (p,q), not n");
    switch (f) {
        case Family::SL_C:
        case Family::SL_R:
        case Family::SL_H:
            if (n < 2) throw std::invalid_argument(family_display(f) + " requires n >= 2");
            break;
        case Family::SO_C:
            if (n < 3) throw std::invalid_argument("SO(n,C) requires n >= 3");
            if (n == 4) throw std::invalid_argument("SO(4,C) is excluded (not simple)");
            break;
        case Family::Sp_C:
        case Family::Sp_R:
            if (n < 1) throw std::invalid_argument(family_display(f) + " requires n >= 1");
            break;
        case Family::SO_star:
            if (n < 2) throw std::invalid_argument("SO*(2n) requires n >= 2");
            break;
        default:
            break;
    }
    GroupSpec g;
    g.family = f;
    g.n = n;
    return g;
}

GroupSpec GroupSpec::make_pq(Family f, int p, int q) {
    if (!family_uses_pq(f))
        throw std::invalid_argument(family_display(f) + " takes parameter n, not (p,q)");
    if (p < 1 || p > q) throw std::invalid_argument(family_display(f) + " requires 1 <= p <= q");
    if (p + q < 3) throw std::invalid_argument(family_display(f) + " requires p + q >= 3");
    GroupSpec g;
    g.family = f;
    g.p = p;
    g.q = q;
    return g;
}

std::string GroupSpec::display() const {
    const std::string N = std::to_string(n), P = std::to_string(p), Q = std::to_string(q);
    switch (family) {
        case Family::SL_C: return "SL(" + N + ",C)";
        case Family::SO_C: return "SO(" + N + ",C)";
        case Family::Sp_C: return "Sp(" + std::to_string(2 * n) + ",C)";
        case Family::SL_R: return "SL(" + N + ",R)";
        case Family::SL_H: return "SL(" + N + ",H)";
        case Family::SO_pq: return "SO(" + P + "," + Q + ")";
        case Family::SU_pq: return "SU(" + P + "," + Q + ")";
        case Family::Sp_pq: return "Sp(" + P + "," + Q + ")";
        case Family::Sp_R: return "Sp(" + std::to_string(2 * n) + ",R)";
        case Family::SO_star: return "SO*(" + std::to_string(2 * n) + ")";
    }
    return "?";
}

DimRecord dims(const GroupSpec& g) {
    const long n = g.n, p = g.p, q = g.q;
    DimRecord d;
    switch (g.family) {
        case Family::SL_C:
            d = {2 * (n * n - 1), n * n - 1, n * n - 1, n - 1};
            break;
        case Family::SO_C:
            d = {n * (n - 1), n * (n - 1) / 2, n * (n - 1) / 2, n / 2};
            break;
        case Family::Sp_C:
            d = {2 * n * (2 * n + 1), n * (2 * n + 1), n * (2 * n + 1), n};
            break;
        case Family::SL_R:
            d = {n * n - 1, n * (n - 1) / 2, n * (n - 1) / 2 + n - 1, n - 1};
            break;
        case Family::SL_H:
            d = {4 * n * n - 1, n * (2 * n + 1), 2 * n * n - n - 1, n - 1};
            break;
        case Family::SO_pq:
            d = {(p + q) * (p + q - 1) / 2, (p * p + q * q - p - q) / 2, p * q, p};
            break;
        case Family::SU_pq:
            d = {(p + q) * (p + q) - 1, p * p + q * q - 1, 2 * p * q, p};
            break;
        case Family::Sp_pq:
            d = {(p + q) * (2 * (p + q) + 1), 2 * p * p + 2 * q * q + p + q, 4 * p * q, p};
            break;
        case Family::Sp_R:
            d = {2 * n * n + n, n * n, n * n + n, n};
            break;
        case Family::SO_star:
            d = {2 * n * n - n, n * n, n * n - n, n / 2};
            break;
    }
    return d;
}

long vcd_lower_bound(const GroupSpec& g) {
    const DimRecord d = dims(g);
    return d.dim_s - d.rank_r;
}

bool is_rank_one(const GroupSpec& g) { return dims(g).rank_r == 1; }

std::string maximal_compact_name(const GroupSpec& g) {
    const std::string N = std::to_string(g.n), P = std::to_string(g.p), Q = std::to_string(g.q);
    switch (g.family) {
        case Family::SL_C: return "SU(" + N + ")";
        case Family::SO_C: return "SO(" + N + ")";
        case Family::Sp_C: return "Sp(" + N + ")";
        case Family::SL_R: return "SO(" + N + ")";
        case Family::SL_H: return "Sp(" + N + ")";
        case Family::SO_pq: return "S(O(" + P + ")xO(" + Q + "))";
        case Family::SU_pq: return "S(U(" + P + ")xU(" + Q + "))";
        case Family::Sp_pq: return "Sp(" + P + ")xSp(" + Q + ")";
        case Family::Sp_R: return "U(" + N + ")";
        case Family::SO_star: return "U(" + N + ")";
    }
    return "?";
}

} // namespace latdim
