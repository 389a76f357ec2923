// Dense exact-rational vectors and matrices, plus the rational interval
// arithmetic used to certify robustness radii of flat certificates.
//
// Sizes here are tiny (ambient dimension <= ~16), so plain Gaussian
// elimination over mpq is always the right tool.

#pragma once

#include "latdim/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace latdim {

using Vec = std::vector<Rat>;

struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

Mat mat_from_columns(const std::vector<Vec>& cols);
Mat mat_from_rows(const std::vector<Vec>& rows);
Mat transpose(const Mat& m);
Mat mul(const Mat& x, const Mat& y);
Vec mul(const Mat& m, const Vec& v);

Rat dot(const Vec& x, const Vec& y);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const Rat& c, const Vec& v);
bool is_zero(const Vec& v);

std::size_t rank(Mat m);
Rat det(Mat m);
std::optional<Mat> inverse(Mat m);

/// Basis of the right kernel {x : m x = 0}.
std::vector<Vec> kernel_basis(Mat m);

/// Unique solution of m x = b when m is square invertible, nullopt otherwise.
std::optional<Vec> solve(Mat m, Vec b);

/// One nonzero functional vanishing on the span of the given vectors
/// (a kernel vector of the matrix whose rows are the vectors); nullopt if
/// the span is the whole space.
std::optional<Vec> functional_vanishing_on(const std::vector<Vec>& span, std::size_t dim);

bool in_span(const Vec& v, const std::vector<Vec>& span);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim);

// ---------------------------------------------------------------------------
// Rational intervals.
//
// Endpoints are exact rationals, so interval evaluation of a polynomial
// expression (determinants, dot products) is itself exact outer enclosure.

struct IRat {
    Rat lo, hi;

    IRat() : lo(0), hi(0) {}
    explicit IRat(const Rat& x) : lo(x), hi(x) {}
    IRat(const Rat& l, const Rat& h) : lo(l), hi(h) {}

    /// [x - radius, x + radius]
    static IRat around(const Rat& x, const Rat& radius) { return IRat(x - radius, x + radius); }

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    /// Certain sign: -1, +1, or 0 when the interval straddles zero.
    int certain_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }
};

IRat iadd(const IRat& x, const IRat& y);
IRat isub(const IRat& x, const IRat& y);
IRat imul(const IRat& x, const IRat& y);

using IVec = std::vector<IRat>;
using IMat = std::vector<std::vector<IRat>>;

IRat idot(const IVec& x, const Vec& y);

/// Enclosure of det over the interval matrix.  Gaussian elimination with
/// sign-certain pivots where possible, cofactor expansion as fallback.
IRat idet(IMat m);

} // namespace latdim
