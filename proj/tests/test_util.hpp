// Shared helpers for randomized tests: seeded small rationals, random
// rational vectors and invertible matrices.

#pragma once

#include "latdim/linalg.hpp"

#include <random>

namespace latdim::testutil {

inline Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return rat(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, int num_range = 9, int den_range = 4) {
    Vec v(n);
    for (auto& x : v) x = random_rat(rng, num_range, den_range);
    return v;
}

inline Vec random_nonzero_vec(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Vec v = random_vec(rng, n);
        if (!is_zero(v)) return v;
    }
}

inline Mat random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_rat(rng, 5, 3);
        if (sgn(det(m)) != 0) return m;
    }
}

/// n-1 independent vectors plus one more outside their span.
inline std::pair<std::vector<Vec>, Vec> random_hyperplane_and_line(std::mt19937_64& rng,
                                                                   std::size_t n) {
    for (;;) {
        const Mat m = random_invertible(rng, n);
        std::vector<Vec> V;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            Vec col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = m.at(i, j);
            V.push_back(std::move(col));
        }
        Vec u(n);
        for (std::size_t i = 0; i < n; ++i) u[i] = m.at(i, n - 1);
        return {std::move(V), std::move(u)};
    }
}

} // namespace latdim::testutil
