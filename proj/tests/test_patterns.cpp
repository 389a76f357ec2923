#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latdim/patterns.hpp"
#include "latdim/serialize.hpp"

#include <map>
#include <set>

using namespace latdim;

namespace {

// Independent oracle: number of partitions of n, by the classical recurrence
// p(n,k) = p(n-k,k) + p(n,k+1).
long partition_count(long n, long min_part = 1) {
    if (n == 0) return 1;
    if (min_part > n) return 0;
    return partition_count(n - min_part, min_part) + partition_count(n, min_part + 1);
}

EigenPattern st_pattern(Family f, std::vector<long> classes, long s, long t) {
    EigenPattern p;
    p.family = f;
    p.classes = std::move(classes);
    p.s = s;
    p.t = t;
    p.canonicalize();
    return p;
}

EigenPattern split_pattern(Family f, std::vector<std::pair<long, long>> splits,
                           std::pair<long, long> ss = {0, 0}, std::pair<long, long> st = {0, 0}) {
    EigenPattern p;
    p.family = f;
    p.splits = std::move(splits);
    p.split_s = ss;
    p.split_t = st;
    p.canonicalize();
    return p;
}

// Compact dimension of the centralizer computed from the factor inventory,
// with the determinant convention of the family (a complex-determinant
// constraint drops one dimension; a real determinant on a unitary block is
// automatically one and drops nothing).
long compact_dim_from_shape(Family f, const CentralizerShape& shape) {
    long dim = 0;
    bool has_complex_det_factor = false;
    for (const auto& fac : shape.factors) {
        switch (fac.kind) {
            case FactorKind::U:
                dim += fac.a * fac.a;
                has_complex_det_factor = true;
                break;
            case FactorKind::O: dim += fac.a * (fac.a - 1) / 2; break;
            case FactorKind::Sp: dim += 2 * fac.a * fac.a + fac.a; break;
            default: REQUIRE(false); // compact shapes only
        }
    }
    if (shape.det_constrained && f == Family::SL_C && has_complex_det_factor) dim -= 1;
    // For SO_C shapes the determinant is real and the unitary blocks have
    // real determinant one, so the constraint is discrete: no dimension drop.
    return dim;
}

} // namespace

TEST_CASE("enumeration examples") {
    SUBCASE("SL(3,C): partitions of 3 with at least two parts") {
        auto pats = enumerate_patterns(GroupSpec::make_n(Family::SL_C, 3));
        REQUIRE(pats.size() == 2);
        std::set<std::vector<long>> got;
        for (auto& p : pats) got.insert(p.classes);
        CHECK(got == std::set<std::vector<long>>{{2, 1}, {1, 1, 1}});
    }
    SUBCASE("Sp(2,R): the scalar patterns are central") {
        auto pats = enumerate_patterns(GroupSpec::make_n(Family::Sp_R, 1));
        REQUIRE(pats.size() == 1);
        CHECK(pats[0].classes == std::vector<long>{1});
        CHECK(pats[0].s == 0);
        CHECK(pats[0].t == 0);
    }
    SUBCASE("invalid spec is rejected before enumeration") {
        CHECK_THROWS_AS(GroupSpec::make_pq(Family::SO_pq, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("enumeration completeness oracles") {
    SUBCASE("SL_C count is p(n) - 1") {
        for (int n = 2; n <= 14; ++n) {
            CAPTURE(n);
            CHECK(count_patterns(GroupSpec::make_n(Family::SL_C, n)) ==
                  std::uint64_t(partition_count(n) - 1));
        }
    }
    SUBCASE("Sp_R with at most one class matches a nested-loop oracle") {
        for (int n = 1; n <= 12; ++n) {
            std::uint64_t oracle = 0;
            for (long s = 0; s <= n; ++s)
                for (long t = 0; s + t <= n; ++t) {
                    const long rem = n - s - t;
                    if (s == n || t == n) continue; // central
                    if (rem == 0 || rem >= 1) {
                        // r = 0 iff rem == 0; r = 1 means a single class of size rem
                        oracle += 1;
                    }
                }
            std::uint64_t got = 0;
            PatternStream stream(GroupSpec::make_n(Family::Sp_R, n));
            while (auto p = stream.next())
                if (p->classes.size() <= 1) ++got;
            CAPTURE(n);
            CHECK(got == oracle);
        }
    }
    SUBCASE("each canonical pattern appears exactly once") {
        for (const auto& g : {GroupSpec::make_n(Family::SL_R, 6), GroupSpec::make_n(Family::Sp_C, 5),
                              GroupSpec::make_pq(Family::SO_pq, 2, 4),
                              GroupSpec::make_pq(Family::SU_pq, 2, 3)}) {
            auto pats = enumerate_patterns(g);
            std::set<std::string> seen;
            for (auto& p : pats) {
                CAPTURE(g.display());
            CAPTURE(p.display());
                CHECK(seen.insert(to_json(p).dump()).second);
            }
        }
    }
}

TEST_CASE("canonicalization is idempotent and validation catches misuse") {
    auto pats = enumerate_patterns(GroupSpec::make_pq(Family::SO_pq, 3, 4));
    for (auto p : pats) {
        EigenPattern q = p;
        q.canonicalize();
        CHECK(q == p);
    }
    EigenPattern bad;
    bad.family = Family::SL_C;
    bad.classes = {2, 1};
    CHECK_THROWS_AS(validate_pattern(GroupSpec::make_n(Family::SL_C, 4), bad),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_pattern(GroupSpec::make_n(Family::SL_R, 3), bad),
                    std::invalid_argument);
}

TEST_CASE("centralizer shape examples") {
    SUBCASE("SL(4,R) reflection-type") {
        auto shape = centralizer_shape(GroupSpec::make_n(Family::SL_R, 4),
                                       st_pattern(Family::SL_R, {}, 1, 3));
        CHECK(shape.display() == "S(GL(3,R)xGL(1,R))");
    }
    SUBCASE("SO(2,3) reflection-type") {
        auto shape = centralizer_shape(GroupSpec::make_pq(Family::SO_pq, 2, 3),
                                       split_pattern(Family::SO_pq, {}, {0, 1}, {2, 2}));
        CHECK(shape.display() == "S(O(0,1)xO(2,2))");
    }
    SUBCASE("SL(2,C) diagonal torus") {
        auto shape = centralizer_shape(GroupSpec::make_n(Family::SL_C, 2),
                                       st_pattern(Family::SL_C, {1, 1}, 0, 0));
        CHECK(shape.display() == "S(U(1)xU(1))");
        CHECK(shape.det_constrained);
    }
    SUBCASE("Sp(6,C)") {
        auto shape = centralizer_shape(GroupSpec::make_n(Family::Sp_C, 3),
                                       st_pattern(Family::Sp_C, {}, 2, 1));
        CHECK(shape.display() == "Sp(2)xSp(1)");
    }
    SUBCASE("SO*(8)") {
        auto shape = centralizer_shape(GroupSpec::make_n(Family::SO_star, 4),
                                       st_pattern(Family::SO_star, {1}, 3, 0));
        CHECK(shape.display() == "SO*(2)xSO*(6)");
    }
}

TEST_CASE("fixed-set dimension examples") {
    CHECK(fixed_set_dim(GroupSpec::make_n(Family::SL_R, 4), st_pattern(Family::SL_R, {}, 1, 3)) == 6);
    CHECK(fixed_set_dim(GroupSpec::make_n(Family::Sp_C, 3), st_pattern(Family::Sp_C, {}, 2, 1)) == 13);
    CHECK(fixed_set_dim(GroupSpec::make_pq(Family::SO_pq, 2, 3),
                        split_pattern(Family::SO_pq, {}, {0, 1}, {2, 2})) == 4);
    CHECK(fixed_set_dim(GroupSpec::make_pq(Family::SU_pq, 2, 3),
                        split_pattern(Family::SU_pq, {{0, 1}, {2, 2}})) == 8);
    SUBCASE("central patterns raise the dedicated error") {
        CHECK_THROWS_AS(fixed_set_dim(GroupSpec::make_n(Family::SL_C, 3),
                                      st_pattern(Family::SL_C, {3}, 0, 0)),
                        CentralPatternError);
        CHECK_THROWS_AS(fixed_set_dim(GroupSpec::make_n(Family::Sp_R, 2),
                                      st_pattern(Family::Sp_R, {}, 2, 0)),
                        CentralPatternError);
    }
}

TEST_CASE("complex families: fixed-set dimension equals the compact centralizer dimension") {
    for (const auto& g : {GroupSpec::make_n(Family::SL_C, 6), GroupSpec::make_n(Family::SO_C, 7),
                          GroupSpec::make_n(Family::SO_C, 8), GroupSpec::make_n(Family::Sp_C, 5)}) {
        for (const auto& p : enumerate_patterns(g)) {
            CAPTURE(g.display());
            CAPTURE(p.display());
            CHECK(fixed_set_dim(g, p) == compact_dim_from_shape(g.family, centralizer_shape(g, p)));
        }
    }
}

TEST_CASE("fixed-set dimension stays inside [0, dim S)") {
    for (const auto& g : {GroupSpec::make_n(Family::SL_C, 5), GroupSpec::make_n(Family::SO_C, 6),
                          GroupSpec::make_n(Family::Sp_C, 4), GroupSpec::make_n(Family::SL_R, 6),
                          GroupSpec::make_n(Family::SL_H, 4), GroupSpec::make_n(Family::Sp_R, 5),
                          GroupSpec::make_n(Family::SO_star, 5),
                          GroupSpec::make_pq(Family::SO_pq, 2, 4),
                          GroupSpec::make_pq(Family::SU_pq, 3, 3),
                          GroupSpec::make_pq(Family::Sp_pq, 2, 3)}) {
        const long dim_s = dims(g).dim_s;
        for (const auto& p : enumerate_patterns(g)) {
            CAPTURE(g.display());
            CAPTURE(p.display());
            const long d = fixed_set_dim(g, p);
            CHECK(d >= 0);
            CHECK(d < dim_s);
        }
    }
}

TEST_CASE("factor sizes account for the ambient parameter") {
    for (const auto& g : {GroupSpec::make_n(Family::SL_R, 7), GroupSpec::make_n(Family::SL_H, 4),
                          GroupSpec::make_pq(Family::Sp_pq, 2, 3),
                          GroupSpec::make_pq(Family::SO_pq, 3, 4)}) {
        for (const auto& p : enumerate_patterns(g)) {
            const auto shape = centralizer_shape(g, p);
            long total = 0;
            for (const auto& f : shape.factors) {
                long weight = 1;
                if (g.family == Family::SL_R && f.kind == FactorKind::GL_C) weight = 2;
                if (g.family == Family::SO_pq && f.kind == FactorKind::U_pq) weight = 2;
                total += weight * (f.a + f.b);
            }
            CAPTURE(g.display());
            CAPTURE(p.display());
            const long ambient = family_uses_pq(g.family) ? g.p + g.q : g.n;
            CHECK(total == ambient);
        }
    }
}

TEST_CASE("pattern JSON round-trips") {
    for (const auto& g : {GroupSpec::make_n(Family::SL_C, 6), GroupSpec::make_n(Family::SL_R, 5),
                          GroupSpec::make_n(Family::SO_star, 4),
                          GroupSpec::make_pq(Family::SO_pq, 2, 4),
                          GroupSpec::make_pq(Family::SU_pq, 2, 3),
                          GroupSpec::make_pq(Family::Sp_pq, 2, 2)}) {
        for (const auto& p : enumerate_patterns(g)) {
            const EigenPattern back = pattern_from_json(to_json(p));
            CAPTURE(g.display());
            CAPTURE(p.display());
            CHECK(back == p);
        }
    }
}

TEST_CASE("strict parity filtering") {
    EnumOptions strict{true};
    // SO(n,C): -1 multiplicity must be even
    for (const auto& p : enumerate_patterns(GroupSpec::make_n(Family::SO_C, 7), strict))
        CHECK(p.t % 2 == 0);
    // SO(p,q): the -1 block must have even total
    for (const auto& p : enumerate_patterns(GroupSpec::make_pq(Family::SO_pq, 2, 3), strict))
        CHECK((p.split_t.first + p.split_t.second) % 2 == 0);
    // SL(n,R): one of the two real eigenspaces must be even-dimensional
    for (const auto& p : enumerate_patterns(GroupSpec::make_n(Family::SL_R, 6), strict))
        CHECK((p.s % 2 == 0 || p.t % 2 == 0));
}
