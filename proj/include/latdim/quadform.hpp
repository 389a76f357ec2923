// Exact symmetric bilinear forms over the rationals: Sylvester signatures via
// congruence reduction, and restriction to subspaces.

#pragma once

#include "latdim/linalg.hpp"

#include <tuple>

namespace latdim {

struct QuadForm {
    Mat m; // symmetric

    QuadForm() = default;
    /// Throws std::invalid_argument unless the matrix is square and
    /// exactly symmetric.
    explicit QuadForm(Mat mat);

    std::size_t dim() const { return m.rows; }

    Rat eval(const Vec& v) const;              // v^t Q v
    Rat eval(const Vec& v, const Vec& w) const; // v^t Q w

    /// diag(-1_p, +1_q)
    static QuadForm standard_pq(std::size_t p, std::size_t q);
};

struct Signature {
    long n_neg = 0, n_zero = 0, n_pos = 0;
    bool operator==(const Signature& o) const {
        return n_neg == o.n_neg && n_zero == o.n_zero && n_pos == o.n_pos;
    }
};

/// Sylvester signature by symmetric congruence reduction with rational
/// pivots; zero-diagonal blocks are handled by a symmetric row+column add.
Signature signature(const QuadForm& form);

/// Gram matrix of the form on the span of the given vectors, in that basis.
/// Rank-deficient lists are allowed; the signature then has n_zero > 0.
QuadForm restrict_form(const QuadForm& form, const std::vector<Vec>& basis);

/// Congruence diagonalization: returns vectors b_1..b_k (in ambient
/// coordinates, spanning the same space as the input basis) that are
/// pairwise orthogonal for the form, together with the diagonal values
/// form(b_i, b_i).
struct Diagonalization {
    std::vector<Vec> basis;
    std::vector<Rat> values;
};
Diagonalization diagonalize_on(const QuadForm& form, const std::vector<Vec>& basis);

} // namespace latdim
