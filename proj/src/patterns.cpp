#include "latdim/patterns.hpp"

#include <algorithm>
#include <sstream>

namespace latdim {

namespace {

long ambient_n(const GroupSpec& g) {
    return family_uses_pq(g.family) ? long(g.p + g.q) : long(g.n);
}

bool family_has_st_classes(Family f) {
    switch (f) {
        case Family::SO_C:
        case Family::SL_R:
        case Family::Sp_C:
        case Family::SL_H:
        case Family::Sp_R:
        case Family::SO_star:
            return true;
        default:
            return false;
    }
}

/// Weight with which a non-real class enters the sum constraint.
long class_weight(Family f) {
    return (f == Family::SO_C || f == Family::SL_R || f == Family::SO_pq) ? 2 : 1;
}

template <typename Fn>
void partitions_desc(long total, long max_part, std::vector<long>& acc, const Fn& fn) {
    if (total == 0) {
        fn(acc);
        return;
    }
    for (long part = std::min(total, max_part); part >= 1; --part) {
        acc.push_back(part);
        partitions_desc(total - part, part, acc, fn);
        acc.pop_back();
    }
}

// Multisets of pairs (a,b) != (0,0) with componentwise sums (P,Q), listed in
// non-increasing lexicographic order.
template <typename Fn>
void pair_multisets(long P, long Q, std::pair<long, long> bound,
                    std::vector<std::pair<long, long>>& acc, const Fn& fn) {
    if (P == 0 && Q == 0) {
        fn(acc);
        return;
    }
    for (long a = std::min(P, bound.first); a >= 0; --a) {
        const long bmax = (a == bound.first) ? std::min(Q, bound.second) : Q;
        for (long b = bmax; b >= 0; --b) {
            if (a == 0 && b == 0) continue;
            acc.emplace_back(a, b);
            pair_multisets(P - a, Q - b, {a, b}, acc, fn);
            acc.pop_back();
        }
    }
}

bool is_noncentral(const GroupSpec& g, const EigenPattern& pat) {
    const long n = ambient_n(g);
    switch (g.family) {
        case Family::SL_C:
            return pat.classes.size() >= 2;
        case Family::SO_C:
        case Family::SL_R:
        case Family::Sp_C:
        case Family::SL_H:
        case Family::Sp_R:
            return pat.s != n && pat.t != n;
        case Family::SO_star:
            // A single full non-real class centralizes to the whole group
            // under the factor model used here, so it counts as central.
            return pat.s != n && pat.t != n &&
                   !(pat.classes.size() == 1 && pat.classes[0] == n);
        case Family::SU_pq:
            return pat.splits.size() >= 2;
        case Family::Sp_pq:
            return pat.split_s != std::make_pair(long(g.p), long(g.q)) &&
                   pat.split_t != std::make_pair(long(g.p), long(g.q));
        case Family::SO_pq:
            return !(pat.splits.empty() &&
                     (pat.split_s == std::make_pair(0L, 0L) ||
                      pat.split_t == std::make_pair(0L, 0L)));
    }
    return false;
}

bool passes_parity(const GroupSpec& g, const EigenPattern& pat, const EnumOptions& opts) {
    if (!opts.parity_strict) return true;
    switch (g.family) {
        case Family::SO_C:
            return pat.t % 2 == 0;
        case Family::SL_R:
            // realizable as determinant-one element up to the central sign
            return pat.t % 2 == 0 || pat.s % 2 == 0;
        case Family::SO_pq:
            return (pat.split_t.first + pat.split_t.second) % 2 == 0;
        default:
            return true;
    }
}

} // namespace

void EigenPattern::canonicalize() {
    std::sort(classes.begin(), classes.end(), std::greater<long>());
    while (!classes.empty() && classes.back() == 0) classes.pop_back();
    std::sort(splits.begin(), splits.end(), std::greater<std::pair<long, long>>());
    while (!splits.empty() && splits.back() == std::make_pair(0L, 0L)) splits.pop_back();
    if (family == Family::SL_R && s > t) std::swap(s, t);
}

bool EigenPattern::operator==(const EigenPattern& o) const {
    return family == o.family && classes == o.classes && s == o.s && t == o.t &&
           splits == o.splits && split_s == o.split_s && split_t == o.split_t;
}

bool EigenPattern::operator<(const EigenPattern& o) const {
    if (family != o.family) return family < o.family;
    if (classes != o.classes) return classes > o.classes; // larger classes first
    if (s != o.s) return s > o.s;
    if (t != o.t) return t > o.t;
    if (splits != o.splits) return splits > o.splits;
    if (split_s != o.split_s) return split_s > o.split_s;
    return split_t > o.split_t;
}

std::string EigenPattern::display() const {
    std::ostringstream os;
    auto pair_str = [](const std::pair<long, long>& pr) {
        return "(" + std::to_string(pr.first) + "," + std::to_string(pr.second) + ")";
    };
    if (family == Family::SL_C) {
        os << "{";
        for (std::size_t i = 0; i < classes.size(); ++i) os << (i ? "," : "") << classes[i];
        os << "}";
        return os.str();
    }
    if (family == Family::SU_pq) {
        os << "(splits=[";
        for (std::size_t i = 0; i < splits.size(); ++i) os << (i ? "," : "") << pair_str(splits[i]);
        os << "])";
        return os.str();
    }
    if (family == Family::Sp_pq || family == Family::SO_pq) {
        os << "(splits=[";
        for (std::size_t i = 0; i < splits.size(); ++i) os << (i ? "," : "") << pair_str(splits[i]);
        os << "], s=" << pair_str(split_s) << ", t=" << pair_str(split_t) << ")";
        return os.str();
    }
    os << "(d=[";
    for (std::size_t i = 0; i < classes.size(); ++i) os << (i ? "," : "") << classes[i];
    os << "], s=" << s << ", t=" << t << ")";
    return os.str();
}

void validate_pattern(const GroupSpec& g, const EigenPattern& pat) {
    if (pat.family != g.family) throw std::invalid_argument("pattern/group family mismatch");
    const long n = ambient_n(g);
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("invalid pattern: ") + what);
    };
    for (long c : pat.classes) require(c >= 1, "class multiplicity must be >= 1");
    for (auto& pr : pat.splits) {
        require(pr.first >= 0 && pr.second >= 0, "split components must be >= 0");
        require(pr.first + pr.second >= 1, "split class must have total >= 1");
    }
    require(pat.s >= 0 && pat.t >= 0, "s,t must be >= 0");
    require(pat.split_s.first >= 0 && pat.split_s.second >= 0 &&
                pat.split_t.first >= 0 && pat.split_t.second >= 0,
            "signature parts must be >= 0");

    long csum = 0;
    for (long c : pat.classes) csum += c;
    long psum = 0, qsum = 0;
    for (auto& pr : pat.splits) {
        psum += pr.first;
        qsum += pr.second;
    }

    switch (g.family) {
        case Family::SL_C:
            require(pat.splits.empty() && pat.s == 0 && pat.t == 0, "SL_C pattern holds classes only");
            require(!pat.classes.empty(), "SL_C pattern needs at least one class");
            require(csum == n, "class multiplicities must sum to n");
            break;
        case Family::SO_C:
        case Family::SL_R:
            require(pat.splits.empty(), "family stores plain class list");
            require(2 * csum + pat.s + pat.t == n, "2*sum(d) + s + t must equal n");
            break;
        case Family::Sp_C:
        case Family::SL_H:
        case Family::Sp_R:
        case Family::SO_star:
            require(pat.splits.empty(), "family stores plain class list");
            require(csum + pat.s + pat.t == n, "sum(d) + s + t must equal n");
            break;
        case Family::SU_pq:
            require(pat.classes.empty() && pat.s == 0 && pat.t == 0, "SU_pq pattern holds splits only");
            require(!pat.splits.empty(), "SU_pq pattern needs at least one split");
            require(psum == g.p && qsum == g.q, "split sums must equal (p,q)");
            break;
        case Family::Sp_pq:
            require(pat.classes.empty(), "family stores splits");
            require(psum + pat.split_s.first + pat.split_t.first == g.p &&
                        qsum + pat.split_s.second + pat.split_t.second == g.q,
                    "split sums must equal (p,q)");
            break;
        case Family::SO_pq:
            require(pat.classes.empty(), "family stores splits");
            require(2 * psum + pat.split_s.first + pat.split_t.first == g.p &&
                        2 * qsum + pat.split_s.second + pat.split_t.second == g.q,
                    "doubled split sums must equal (p,q)");
            break;
    }
}

bool is_central_pattern(const GroupSpec& g, const EigenPattern& pat) {
    validate_pattern(g, pat);
    return !is_noncentral(g, pat);
}

// ---------------------------------------------------------------------------
// Enumeration

PatternStream::PatternStream(const GroupSpec& g, EnumOptions opts) : group_(g), opts_(opts) {
    const long n = ambient_n(g);
    if (g.family == Family::SL_C || g.family == Family::SU_pq) {
        cell_count_ = 1;
    } else if (family_has_st_classes(g.family)) {
        cell_count_ = (n + 1) * (n + 1); // (s,t) grid, invalid cells empty
    } else {
        // Sp_pq / SO_pq: cells indexed by (p_s,q_s,p_t,q_t)
        cell_count_ = long(g.p + 1) * (g.q + 1) * (g.p + 1) * (g.q + 1);
    }
}

void PatternStream::refill() {
    buffer_.clear();
    pos_ = 0;
    const GroupSpec& g = group_;
    const long n = ambient_n(g);
    auto emit = [&](EigenPattern&& pat) {
        pat.canonicalize();
        if (is_noncentral(g, pat) && passes_parity(g, pat, opts_)) buffer_.push_back(std::move(pat));
    };

    while (buffer_.empty() && cell_ < cell_count_) {
        const long cell = cell_++;
        if (g.family == Family::SL_C) {
            std::vector<long> acc;
            partitions_desc(n, n, acc, [&](const std::vector<long>& parts) {
                EigenPattern pat;
                pat.family = g.family;
                pat.classes = parts;
                emit(std::move(pat));
            });
        } else if (g.family == Family::SU_pq) {
            std::vector<std::pair<long, long>> acc;
            pair_multisets(g.p, g.q, {g.p, g.q}, acc, [&](const auto& prs) {
                EigenPattern pat;
                pat.family = g.family;
                pat.splits = prs;
                emit(std::move(pat));
            });
        } else if (family_has_st_classes(g.family)) {
            const long s = cell / (n + 1), t = cell % (n + 1);
            if (s + t > n) continue;
            if (g.family == Family::SL_R && s > t) continue; // canonical reps only
            const long rem = n - s - t;
            const long w = class_weight(g.family);
            if (rem % w != 0) continue;
            std::vector<long> acc;
            partitions_desc(rem / w, rem / w, acc, [&](const std::vector<long>& parts) {
                EigenPattern pat;
                pat.family = g.family;
                pat.classes = parts;
                pat.s = s;
                pat.t = t;
                emit(std::move(pat));
            });
        } else {
            const long QQ = g.q + 1, PP = g.p + 1;
            long c = cell;
            const long qt = c % QQ; c /= QQ;
            const long pt = c % PP; c /= PP;
            const long qs = c % QQ; c /= QQ;
            const long ps = c;
            const long w = class_weight(g.family);
            const long remP = g.p - ps - pt, remQ = g.q - qs - qt;
            if (remP < 0 || remQ < 0 || remP % w != 0 || remQ % w != 0) continue;
            std::vector<std::pair<long, long>> acc;
            pair_multisets(remP / w, remQ / w, {remP / w, remQ / w}, acc, [&](const auto& prs) {
                EigenPattern pat;
                pat.family = g.family;
                pat.splits = prs;
                pat.split_s = {ps, qs};
                pat.split_t = {pt, qt};
                emit(std::move(pat));
            });
        }
    }
    if (buffer_.empty()) done_ = true;
}

std::optional<EigenPattern> PatternStream::next() {
    while (!done_ && pos_ >= buffer_.size()) refill();
    if (done_) return std::nullopt;
    return buffer_[pos_++];
}

std::vector<EigenPattern> enumerate_patterns(const GroupSpec& g, EnumOptions opts) {
    PatternStream stream(g, opts);
    std::vector<EigenPattern> out;
    while (auto pat = stream.next()) out.push_back(std::move(*pat));
    return out;
}

std::uint64_t count_patterns(const GroupSpec& g, EnumOptions opts) {
    PatternStream stream(g, opts);
    std::uint64_t k = 0;
    while (stream.next()) ++k;
    return k;
}

// ---------------------------------------------------------------------------
// Centralizer shapes and fixed-set dimensions

std::string CentralizerShape::display() const {
    std::ostringstream os;
    if (det_constrained) os << "S(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "x";
        const Factor& f = factors[i];
        const std::string A = std::to_string(f.a), B = std::to_string(f.b);
        switch (f.kind) {
            case FactorKind::U: os << "U(" << A << ")"; break;
            case FactorKind::O: os << "O(" << A << ")"; break;
            case FactorKind::Sp: os << "Sp(" << A << ")"; break;
            case FactorKind::GL_R: os << "GL(" << A << ",R)"; break;
            case FactorKind::GL_C: os << "GL(" << A << ",C)"; break;
            case FactorKind::GL_H: os << "GL(" << A << ",H)"; break;
            case FactorKind::U_pq: os << "U(" << A << "," << B << ")"; break;
            case FactorKind::SU_pq: os << "SU(" << A << "," << B << ")"; break;
            case FactorKind::O_pq: os << "O(" << A << "," << B << ")"; break;
            case FactorKind::Sp_pq: os << "Sp(" << A << "," << B << ")"; break;
            case FactorKind::Sp_2nR: os << "Sp(" << 2 * f.a << ",R)"; break;
            case FactorKind::SO_star: os << "SO*(" << 2 * f.a << ")"; break;
        }
    }
    if (det_constrained) os << ")";
    return os.str();
}

CentralizerShape centralizer_shape(const GroupSpec& g, const EigenPattern& pat) {
    validate_pattern(g, pat);
    CentralizerShape shape;
    auto add = [&](FactorKind k, long a, long b = 0) {
        if (a + b > 0) shape.factors.push_back({k, a, b});
    };
    switch (g.family) {
        case Family::SL_C:
            for (long m : pat.classes) add(FactorKind::U, m);
            shape.det_constrained = true;
            break;
        case Family::SO_C:
            for (long d : pat.classes) add(FactorKind::U, d);
            add(FactorKind::O, pat.s);
            add(FactorKind::O, pat.t);
            shape.det_constrained = true;
            break;
        case Family::Sp_C:
            for (long d : pat.classes) add(FactorKind::U, d);
            add(FactorKind::Sp, pat.s);
            add(FactorKind::Sp, pat.t);
            break;
        case Family::SL_R:
            add(FactorKind::GL_R, pat.t);
            add(FactorKind::GL_R, pat.s);
            for (long d : pat.classes) add(FactorKind::GL_C, d);
            shape.det_constrained = true;
            break;
        case Family::SL_H:
            for (long d : pat.classes) add(FactorKind::GL_C, d);
            add(FactorKind::GL_H, pat.s);
            add(FactorKind::GL_H, pat.t);
            shape.det_constrained = true;
            break;
        case Family::SU_pq:
            for (auto& pr : pat.splits) add(FactorKind::U_pq, pr.first, pr.second);
            shape.det_constrained = true;
            break;
        case Family::Sp_pq:
            for (auto& pr : pat.splits) add(FactorKind::SU_pq, pr.first, pr.second);
            add(FactorKind::Sp_pq, pat.split_s.first, pat.split_s.second);
            add(FactorKind::Sp_pq, pat.split_t.first, pat.split_t.second);
            break;
        case Family::Sp_R:
            add(FactorKind::Sp_2nR, pat.s);
            add(FactorKind::Sp_2nR, pat.t);
            for (long d : pat.classes) add(FactorKind::U, d);
            break;
        case Family::SO_pq:
            add(FactorKind::O_pq, pat.split_s.first, pat.split_s.second);
            add(FactorKind::O_pq, pat.split_t.first, pat.split_t.second);
            for (auto& pr : pat.splits) add(FactorKind::U_pq, pr.first, pr.second);
            shape.det_constrained = true;
            break;
        case Family::SO_star:
            for (long d : pat.classes) add(FactorKind::SO_star, d);
            add(FactorKind::SO_star, pat.s);
            add(FactorKind::SO_star, pat.t);
            break;
    }
    return shape;
}

long fixed_set_dim(const GroupSpec& g, const EigenPattern& pat) {
    validate_pattern(g, pat);
    if (!is_noncentral(g, pat))
        throw CentralPatternError("central pattern: fixed set is all of S");
    long sum2 = 0;
    for (long c : pat.classes) sum2 += c * c;
    long cross = 0;
    for (auto& pr : pat.splits) cross += pr.first * pr.second;
    const long s = pat.s, t = pat.t;
    const long ps = pat.split_s.first, qs = pat.split_s.second;
    const long pt = pat.split_t.first, qt = pat.split_t.second;
    switch (g.family) {
        case Family::SL_C: return -1 + sum2;
        case Family::SO_C: return sum2 + s * (s - 1) / 2 + t * (t - 1) / 2;
        case Family::Sp_C: return sum2 + 2 * s * s + s + 2 * t * t + t;
        case Family::SL_R: return -1 + s * (s + 1) / 2 + t * (t + 1) / 2 + sum2;
        case Family::SL_H: return -1 + sum2 + 2 * s * s - s + 2 * t * t - t;
        case Family::SU_pq: return 2 * cross;
        case Family::Sp_pq: return 4 * ps * qs + 4 * pt * qt + 2 * cross;
        case Family::Sp_R: return s * s + s + t * t + t;
        case Family::SO_pq: return ps * qs + pt * qt + 2 * cross;
        case Family::SO_star: return s * s + t * t + sum2 - ambient_n(g);
    }
    throw std::logic_error("unreachable");
}

} // namespace latdim
