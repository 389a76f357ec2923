#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latdim/quadform.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace latdim;
using namespace latdim::testutil;

namespace {

Mat mat2(std::initializer_list<std::initializer_list<long>> rows) {
    Mat m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long x : r) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

// Independent sampling oracle for the signature of a small form: counts sign
// changes of v^t Q v over a dense set of float directions and infers the
// inertia from the extreme Rayleigh quotients per coordinate slice.  Only
// used to cross-check restrictions where the exact path is the one under
// test; it brute-forces definiteness on random directions.
bool attains_negative_by_sampling(const QuadForm& q, int samples = 4000) {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    const std::size_t k = q.dim();
    std::vector<std::vector<double>> qd(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) qd[i][j] = q.m.at(i, j).get_d();
    for (int s = 0; s < samples; ++s) {
        std::vector<double> v(k);
        for (auto& x : v) x = coord(rng);
        double val = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) val += v[i] * qd[i][j] * v[j];
        if (val < -1e-9) return true;
    }
    return false;
}

} // namespace

TEST_CASE("signature basics") {
    CHECK(signature(QuadForm::standard_pq(2, 3)) == Signature{2, 0, 3});
    CHECK(signature(QuadForm(mat2({{0, 1}, {1, 0}}))) == Signature{1, 0, 1});
    CHECK(signature(QuadForm(mat2({{0, 0}, {0, 0}}))) == Signature{0, 2, 0});
    CHECK(signature(QuadForm(mat2({{1, 2}, {2, 4}}))) == Signature{0, 1, 1});
    CHECK_THROWS_AS(QuadForm(mat2({{1, 2}, {3, 4}})), std::invalid_argument);
}

TEST_CASE("Sylvester invariance under 200 random congruences per form") {
    std::mt19937_64 rng(7);
    const QuadForm q23 = QuadForm::standard_pq(2, 3);
    const QuadForm hyp(mat2({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}));
    for (const QuadForm* base : {&q23, &hyp}) {
        const Signature expect = signature(*base);
        for (int trial = 0; trial < 200; ++trial) {
            const Mat m = random_invertible(rng, base->dim());
            const Mat congruent = mul(transpose(m), mul(base->m, m));
            CAPTURE(trial);
            CHECK(signature(QuadForm(congruent)) == expect);
        }
    }
}

TEST_CASE("restriction examples") {
    const QuadForm q12 = QuadForm::standard_pq(1, 2);
    SUBCASE("coordinate plane") {
        const QuadForm r = restrict_form(q12, {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
        CHECK(r.m == Mat::identity(2));
        CHECK(signature(r) == Signature{0, 0, 2});
    }
    SUBCASE("isotropic line") {
        const QuadForm r = restrict_form(q12, {{Rat(1), Rat(1), Rat(0)}});
        CHECK(signature(r) == Signature{0, 1, 0});
    }
    SUBCASE("random planes against the sampling oracle") {
        std::mt19937_64 rng(11);
        const QuadForm q23 = QuadForm::standard_pq(2, 3);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Vec> plane = {random_nonzero_vec(rng, 5), random_nonzero_vec(rng, 5)};
            const QuadForm r = restrict_form(q23, plane);
            const Signature sig = signature(r);
            CAPTURE(trial);
            CHECK((sig.n_neg >= 1) == attains_negative_by_sampling(r));
        }
    }
}

TEST_CASE("diagonalization spans and orthogonalizes") {
    std::mt19937_64 rng(13);
    const QuadForm q = QuadForm::standard_pq(2, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec> basis;
        for (int k = 0; k < 4; ++k) basis.push_back(random_nonzero_vec(rng, 5));
        if (rank(mat_from_rows(basis)) != 4) continue;
        const Diagonalization d = diagonalize_on(q, basis);
        REQUIRE(d.basis.size() == 4);
        for (std::size_t i = 0; i < d.basis.size(); ++i) {
            CHECK(q.eval(d.basis[i]) == d.values[i]);
            for (std::size_t j = i + 1; j < d.basis.size(); ++j)
                CHECK(sgn(q.eval(d.basis[i], d.basis[j])) == 0);
        }
        CHECK(same_span(basis, d.basis, 5));
    }
}

TEST_CASE("rational square detection") {
    Rat root;
    CHECK(rat_is_square(Rat(4), &root));
    CHECK(root == 2);
    CHECK(rat_is_square(Rat(9, 16), &root));
    CHECK(root == Rat(3, 4));
    CHECK_FALSE(rat_is_square(Rat(2)));
    CHECK_FALSE(rat_is_square(Rat(-4)));
    CHECK(rat_is_square(Rat(0), &root));
    CHECK(root == 0);
}
