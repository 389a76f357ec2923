// Exact rational scalars for the whole library, backed by GMP.
//
// Everything downstream (signatures, cone tests, flat certificates) relies on
// exact sign decisions, so the scalar type is mpq_class throughout.  Floating
// point never enters the library proper; it only appears in test-side
// sampling oracles.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latdim {

using Int = mpz_class;
using Rat = mpq_class;

/// Construct a canonical rational num/den (den > 0 after canonicalization).
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "num", "num/den" (decimal digits, optional leading '-').
inline Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s, 10);
        if (r.get_den() == 0)
            throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

/// Render canonically: integers as "n", everything else as "num/den".
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign(const Rat& r) { return sgn(r); }

/// True if r equals a square of a rational; if so *root is the nonnegative root.
inline bool rat_is_square(const Rat& r, Rat* root = nullptr) {
    if (sgn(r) < 0) return false;
    const Int num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    if (root) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rat(rn, rd);
        root->canonicalize();
    }
    return true;
}

} // namespace latdim
