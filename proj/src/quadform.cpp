#include "latdim/quadform.hpp"

namespace latdim {

QuadForm::QuadForm(Mat mat) : m(std::move(mat)) {
    if (m.rows != m.cols) throw std::invalid_argument("form matrix must be square");
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("form matrix must be exactly symmetric");
}

Rat QuadForm::eval(const Vec& v) const { return eval(v, v); }

Rat QuadForm::eval(const Vec& v, const Vec& w) const {
    if (v.size() != dim() || w.size() != dim())
        throw std::invalid_argument("form evaluation shape mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(v[i]) == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) s += v[i] * m.at(i, j) * w[j];
    }
    return s;
}

QuadForm QuadForm::standard_pq(std::size_t p, std::size_t q) {
    Mat m(p + q, p + q);
    for (std::size_t i = 0; i < p; ++i) m.at(i, i) = -1;
    for (std::size_t i = p; i < p + q; ++i) m.at(i, i) = 1;
    return QuadForm(std::move(m));
}

namespace {

// Symmetric congruence reduction on a working copy; reports diagonal signs.
// When requested, accumulates the congruence transform so callers can
// recover a diagonalizing basis.
Signature reduce(Mat a, Mat* transform) {
    const std::size_t n = a.rows;
    Mat t = Mat::identity(n);
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a.at(k, k)) == 0) {
            // look for a later nonzero diagonal entry
            std::size_t swp = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (sgn(a.at(i, i)) != 0) { swp = i; break; }
            if (swp != n) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swp, j));
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(j, k), a.at(j, swp));
                for (std::size_t j = 0; j < n; ++j) std::swap(t.at(k, j), t.at(swp, j));
            } else {
                // all-zero diagonal: bring in an off-diagonal entry, if any
                std::size_t bi = n, bj = n;
                for (std::size_t i = k; i < n && bi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (sgn(a.at(i, j)) != 0) { bi = i; bj = j; break; }
                if (bi == n) break; // remaining block is zero
                if (bi != k) {
                    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(bi, j));
                    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(j, k), a.at(j, bi));
                    for (std::size_t j = 0; j < n; ++j) std::swap(t.at(k, j), t.at(bi, j));
                }
                // row/col k += row/col bj makes a(k,k) = 2 a(k,bj) != 0
                for (std::size_t j = 0; j < n; ++j) a.at(k, j) += a.at(bj, j);
                for (std::size_t j = 0; j < n; ++j) a.at(j, k) += a.at(j, bj);
                for (std::size_t j = 0; j < n; ++j) t.at(k, j) += t.at(bj, j);
            }
        }
        const Rat piv = a.at(k, k);
        if (sgn(piv) == 0) break;
        sig.n_neg += sgn(piv) < 0;
        sig.n_pos += sgn(piv) > 0;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a.at(i, k)) == 0) continue;
            const Rat f = a.at(i, k) / piv;
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            for (std::size_t j = 0; j < n; ++j) a.at(j, i) -= f * a.at(j, k);
            for (std::size_t j = 0; j < n; ++j) t.at(i, j) -= f * t.at(k, j);
        }
    }
    sig.n_zero = long(n) - sig.n_neg - sig.n_pos;
    if (transform) *transform = std::move(t);
    return sig;
}

} // namespace

Signature signature(const QuadForm& form) { return reduce(form.m, nullptr); }

QuadForm restrict_form(const QuadForm& form, const std::vector<Vec>& basis) {
    const std::size_t k = basis.size();
    Mat g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            g.at(i, j) = form.eval(basis[i], basis[j]);
            g.at(j, i) = g.at(i, j);
        }
    return QuadForm(std::move(g));
}

Diagonalization diagonalize_on(const QuadForm& form, const std::vector<Vec>& basis) {
    const QuadForm restricted = restrict_form(form, basis);
    Mat t;
    reduce(restricted.m, &t);
    // rows of t give the diagonalizing combinations of the input basis
    Diagonalization d;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Vec v(form.dim(), Rat(0));
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (sgn(t.at(i, j)) != 0) v = add(v, scale(t.at(i, j), basis[j]));
        d.basis.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < d.basis.size(); ++i) d.values.push_back(form.eval(d.basis[i]));
    return d;
}

} // namespace latdim
