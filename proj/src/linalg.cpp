#include "latdim/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace latdim {

Mat mat_from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows) throw std::invalid_argument("ragged column list");
        for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Mat mat_from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw std::invalid_argument("ragged row list");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Mat mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
    Mat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (sgn(x.at(i, k)) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

Vec mul(const Mat& m, const Vec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec r(m.rows, Rat(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

Rat dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot shape mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Vec add(const Vec& x, const Vec& y) {
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

Vec sub(const Vec& x, const Vec& y) {
    Vec r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

Vec scale(const Rat& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

namespace {

// Row echelon with partial pivoting by first nonzero; returns pivot columns.
std::vector<std::size_t> row_echelon(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && sgn(m.at(piv, col)) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        const Rat inv_p = 1 / m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv_p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || sgn(m.at(i, col)) == 0) continue;
            const Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Mat m) { return row_echelon(m).size(); }

Rat det(Mat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    Rat d(1);
    const std::size_t n = m.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && sgn(m.at(piv, col)) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        const Rat inv_p = 1 / m.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(m.at(i, col)) == 0) continue;
            const Rat f = m.at(i, col) * inv_p;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<Mat> inverse(Mat m) {
    if (m.rows != m.cols) return std::nullopt;
    const std::size_t n = m.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = row_echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<Vec> kernel_basis(Mat m) {
    const std::size_t n = m.cols;
    auto pivots = row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Mat m, Vec b) {
    if (m.rows != m.cols || m.rows != b.size()) return std::nullopt;
    const std::size_t n = m.rows;
    Mat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto pivots = row_echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
    return x;
}

std::optional<Vec> functional_vanishing_on(const std::vector<Vec>& span, std::size_t dim) {
    Mat m = span.empty() ? Mat(1, dim) : mat_from_rows(span); // all-zero row if empty
    auto ker = kernel_basis(std::move(m));
    if (ker.empty()) return std::nullopt;
    return ker.front();
}

bool in_span(const Vec& v, const std::vector<Vec>& span) {
    std::vector<Vec> rows = span;
    Mat m0 = mat_from_rows(rows);
    const std::size_t r0 = rank(m0);
    rows.push_back(v);
    return rank(mat_from_rows(rows)) == r0;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim) {
    std::vector<Vec> all = a;
    all.insert(all.end(), b.begin(), b.end());
    if (all.empty()) return true;
    const std::size_t ra = a.empty() ? 0 : rank(mat_from_rows(a));
    const std::size_t rb = b.empty() ? 0 : rank(mat_from_rows(b));
    (void)dim;
    return ra == rb && rank(mat_from_rows(all)) == ra;
}

// ---------------------------------------------------------------------------
// Interval arithmetic

IRat iadd(const IRat& x, const IRat& y) { return IRat(x.lo + y.lo, x.hi + y.hi); }
IRat isub(const IRat& x, const IRat& y) { return IRat(x.lo - y.hi, x.hi - y.lo); }

IRat imul(const IRat& x, const IRat& y) {
    const Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    Rat lo = a, hi = a;
    for (const Rat* v : {&b, &c, &d}) {
        if (*v < lo) lo = *v;
        if (*v > hi) hi = *v;
    }
    return IRat(lo, hi);
}

IRat idot(const IVec& x, const Vec& y) {
    IRat s;
    for (std::size_t i = 0; i < x.size(); ++i) s = iadd(s, imul(x[i], IRat(y[i])));
    return s;
}

namespace {

IRat idiv(const IRat& x, const IRat& y) {
    // Caller guarantees y has certain sign.
    const Rat a = x.lo / y.lo, b = x.lo / y.hi, c = x.hi / y.lo, d = x.hi / y.hi;
    Rat lo = a, hi = a;
    for (const Rat* v : {&b, &c, &d}) {
        if (*v < lo) lo = *v;
        if (*v > hi) hi = *v;
    }
    return IRat(lo, hi);
}

// Cofactor expansion over subsets; exponential but only used when a pivot
// cannot be sign-certified, which the callers' margins make rare.
IRat idet_laplace(const IMat& m) {
    const std::size_t n = m.size();
    // dp over column subsets, processed row by row
    std::vector<IRat> dp(std::size_t(1) << n);
    dp[0] = IRat(Rat(1));
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
        const std::size_t row = k - 1;
        IRat acc;
        bool flip = false;
        for (std::size_t j = 0, seen = 0; j < n; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            const IRat term = imul(m[row][j], dp[mask ^ (std::size_t(1) << j)]);
            acc = (seen % 2 == 0) ? iadd(acc, term) : isub(acc, term);
            ++seen;
            (void)flip;
        }
        dp[mask] = acc;
    }
    return dp.back();
}

} // namespace

IRat idet(IMat m) {
    const std::size_t n = m.size();
    if (n == 0) return IRat(Rat(1));
    IRat d(Rat(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (m[i][col].certain_sign() != 0) { piv = i; break; }
        if (piv == n) {
            // no sign-certain pivot: fall back on the remaining minor
            IMat rest(n - col, IVec(n - col));
            for (std::size_t i = col; i < n; ++i)
                for (std::size_t j = col; j < n; ++j) rest[i - col][j - col] = m[i][j];
            return imul(d, idet_laplace(rest));
        }
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = imul(d, IRat(Rat(-1)));
        }
        d = imul(d, m[col][col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            const IRat f = idiv(m[i][col], m[col][col]);
            for (std::size_t j = col; j < n; ++j) m[i][j] = isub(m[i][j], imul(f, m[col][j]));
        }
    }
    return d;
}

} // namespace latdim
