#include "latdim/flats.hpp"

#include <algorithm>
#include <random>

namespace latdim {

namespace {

Vec normalized_by_max(Vec v) {
    Rat m(0);
    for (const auto& x : v) {
        Rat a = abs(x);
        if (a > m) m = a;
    }
    if (sgn(m) != 0)
        for (auto& x : v) x /= m;
    return v;
}

// Scale to a primitive integer vector (keeps direction and sign).
Vec clear_denominators(Vec v) {
    Int l(1);
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Int g(0);
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (sgn(g) != 0)
        for (auto& x : v) x /= g;
    return v;
}

/// Functional vanishing on the hyperplane, scaled so that it is positive on u.
Vec oriented_functional(const std::vector<Vec>& V, const Vec& u) {
    auto f = functional_vanishing_on(V, u.size());
    if (!f) throw DegenerateInputError("hyperplane basis spans the whole space");
    const Rat fu = dot(*f, u);
    if (sgn(fu) == 0) throw DegenerateInputError("the line vector lies in the hyperplane");
    return sgn(fu) > 0 ? *f : scale(Rat(-1), *f);
}

} // namespace

void validate_fixed_set(const FixedSetSpec& fix, const QuadForm* form) {
    const std::size_t n = fix.dim();
    if (n == 0 || fix.u.empty()) throw std::invalid_argument("empty reflection spec");
    if (fix.V.size() != n - 1)
        throw std::invalid_argument("reflection hyperplane needs n-1 basis vectors");
    for (const auto& w : fix.V)
        if (w.size() != n) throw std::invalid_argument("reflection spec dimension mismatch");
    if (rank(mat_from_rows(fix.V)) != n - 1)
        throw std::invalid_argument("reflection hyperplane basis is rank deficient");
    std::vector<Vec> all = fix.V;
    all.push_back(fix.u);
    if (rank(mat_from_rows(all)) != n)
        throw std::invalid_argument("reflection line lies inside its hyperplane");
    if (fix.mode == FixMode::SO_REFLECTION) {
        if (!form) throw std::invalid_argument("SO reflection spec needs the ambient form");
        for (const auto& w : fix.V)
            if (sgn(form->eval(fix.u, w)) != 0)
                throw std::invalid_argument("reflection line is not form-orthogonal to the hyperplane");
        if (sgn(form->eval(fix.u)) == 0)
            throw std::invalid_argument("form must be definite on the reflection line");
    }
}

void validate_flat(const FlatSpec& flat, const QuadForm* form) {
    if (flat.mode == FixMode::SL_REFLECTION) {
        const std::size_t n = flat.dim();
        if (n == 0 || flat.basis.size() != n)
            throw std::invalid_argument("flat basis must have n vectors");
        if (sgn(det(mat_from_columns(flat.basis))) == 0)
            throw std::invalid_argument("flat basis is linearly dependent");
        return;
    }
    if (!form) throw std::invalid_argument("plane decomposition needs the ambient form");
    if (flat.planes.empty()) throw std::invalid_argument("plane decomposition needs planes");
    const std::size_t n = flat.dim();
    std::vector<Vec> all;
    for (const auto& pl : flat.planes) {
        const Signature sig = signature(restrict_form(*form, {pl[0], pl[1]}));
        if (!(sig == Signature{1, 0, 1}))
            throw std::invalid_argument("plane restriction must have signature (1,1)");
        all.push_back(pl[0]);
        all.push_back(pl[1]);
    }
    for (std::size_t i = 0; i < flat.planes.size(); ++i)
        for (std::size_t j = i + 1; j < flat.planes.size(); ++j)
            for (const Vec& x : flat.planes[i])
                for (const Vec& y : flat.planes[j])
                    if (sgn(form->eval(x, y)) != 0)
                        throw std::invalid_argument("planes must be pairwise form-orthogonal");
    for (const Vec& r : flat.rest) {
        for (const auto& pl : flat.planes)
            for (const Vec& x : pl)
                if (sgn(form->eval(r, x)) != 0)
                    throw std::invalid_argument("remainder must be form-orthogonal to the planes");
        all.push_back(r);
    }
    if (all.size() != n || rank(mat_from_rows(all)) != n)
        throw std::invalid_argument("plane decomposition must span the whole space");
}

std::string verdict_name(CertVerdict v) {
    switch (v) {
        case CertVerdict::SINGLE_POINT: return "SINGLE_POINT";
        case CertVerdict::EMPTY: return "EMPTY";
        case CertVerdict::CONTAINED: return "CONTAINED";
        case CertVerdict::DEGENERATE: return "DEGENERATE";
    }
    return "?";
}

std::string obstruction_name(ObstructionTag o) {
    switch (o) {
        case ObstructionTag::NONE: return "NONE";
        case ObstructionTag::CONE_OBSTRUCTION: return "CONE_OBSTRUCTION";
        case ObstructionTag::SIGN_INFEASIBLE: return "SIGN_INFEASIBLE";
        case ObstructionTag::POSITIVE_DEFINITE_RESTRICTION: return "POSITIVE_DEFINITE_RESTRICTION";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// SL model

IntersectionCertificate flat_meets_fixedset_sl(const FlatSpec& flat, const FixedSetSpec& fix) {
    if (flat.mode != FixMode::SL_REFLECTION || fix.mode != FixMode::SL_REFLECTION)
        throw std::invalid_argument("flat/fixed-set mode mismatch");
    if (flat.dim() != fix.dim()) throw std::invalid_argument("ambient dimension mismatch");
    const std::size_t n = flat.dim();
    if (n < 2) throw std::invalid_argument("ambient dimension must be at least 2");

    // One kernel computation both validates the hyperplane data and yields
    // the side functional.
    if (fix.V.size() != n - 1) validate_fixed_set(fix);
    auto fker = kernel_basis(mat_from_rows(fix.V));
    if (fker.size() != 1) {
        validate_fixed_set(fix); // throws with the precise reason
        throw std::logic_error("hyperplane kernel dimension mismatch");
    }
    Vec f = clear_denominators(std::move(fker.front()));
    const int fu = sgn(dot(f, fix.u));
    if (fu == 0) {
        validate_fixed_set(fix); // throws: line inside hyperplane
        throw std::logic_error("side functional vanished on the line");
    }
    if (fu < 0) f = scale(Rat(-1), f);

    const auto c_opt = solve(mat_from_columns(flat.basis), fix.u);
    if (!c_opt) {
        validate_flat(flat); // throws: dependent basis
        throw std::logic_error("solve failed on an invertible basis");
    }
    const Vec& c_fast = *c_opt;

    // Fast path: with every coordinate and every side value nonzero the
    // verdict is determined by the sign pattern alone.
    bool generic = true;
    std::vector<int> csign(n), bsign(n);
    for (std::size_t j = 0; j < n; ++j) {
        csign[j] = sgn(c_fast[j]);
        bsign[j] = sgn(dot(f, flat.basis[j]));
        if (csign[j] == 0 || bsign[j] == 0) generic = false;
    }
    if (generic) {
        IntersectionCertificate cert;
        bool matched = true;
        for (std::size_t j = 0; j < n; ++j)
            if (csign[j] != bsign[j]) matched = false;
        if (matched) {
            Vec a(n);
            for (std::size_t j = 0; j < n; ++j) a[j] = dot(f, flat.basis[j]) / c_fast[j];
            a = normalized_by_max(std::move(a));
            cert.verdict = CertVerdict::SINGLE_POINT;
            cert.nonempty = 1;
            cert.witness_diag = a;
            cert.margins = std::move(a);
        } else {
            // a sign mismatch is exactly the strict cone obstruction
            cert.verdict = CertVerdict::EMPTY;
            cert.nonempty = -1;
            cert.obstruction = ObstructionTag::CONE_OBSTRUCTION;
        }
        return cert;
    }

    validate_flat(flat);
    validate_fixed_set(fix);
    const Mat B = mat_from_columns(flat.basis);
    const Mat Binv = *inverse(B);
    const Vec c = mul(Binv, fix.u); // coordinates of u in the flat basis

    // orthogonality system in the diagonal coefficients a_1..a_n
    Mat M(n - 1, n);
    for (std::size_t k = 0; k < n - 1; ++k) {
        const Vec wk = mul(Binv, fix.V[k]);
        for (std::size_t i = 0; i < n; ++i) M.at(k, i) = c[i] * wk[i];
    }
    const auto kernel = kernel_basis(M);

    IntersectionCertificate cert;
    if (kernel.size() == n) {
        cert.verdict = CertVerdict::CONTAINED;
        cert.nonempty = 1;
        cert.witness_diag.assign(n, Rat(1));
        cert.margins.assign(n, Rat(1));
        return cert;
    }
    if (kernel.size() >= 2) {
        cert.verdict = CertVerdict::DEGENERATE;
        cert.note = "solution space has dimension " + std::to_string(kernel.size()) +
                    "; single-point convention does not decide this configuration";
        return cert;
    }
    auto classify_empty = [&](IntersectionCertificate& out) {
        out.verdict = CertVerdict::EMPTY;
        out.nonempty = -1;
        out.obstruction = ObstructionTag::SIGN_INFEASIBLE;
        // if the one-side hypotheses hold, the spherical cone test explains
        // the emptiness
        const Vec f = oriented_functional(fix.V, fix.u);
        bool applicable = true;
        for (std::size_t j = 0; j < n && applicable; ++j)
            if (sgn(dot(f, flat.basis[j])) == 0) applicable = false;
        if (applicable && cone_obstruction(fix.u, fix.V, flat.basis))
            out.obstruction = ObstructionTag::CONE_OBSTRUCTION;
    };
    if (kernel.empty()) { // cannot occur for an (n-1) x n system; kept for safety
        classify_empty(cert);
        return cert;
    }
    Vec a = kernel.front();
    int s = 0;
    for (const auto& x : a) {
        if (sgn(x) == 0) { s = 0; break; }
        if (s == 0) s = sgn(x);
        else if (s != sgn(x)) { s = 0; break; }
    }
    if (s == 0) {
        classify_empty(cert);
        return cert;
    }
    if (s < 0) a = scale(Rat(-1), a);
    a = normalized_by_max(std::move(a));
    cert.verdict = CertVerdict::SINGLE_POINT;
    cert.nonempty = 1;
    cert.witness_diag = a;
    cert.margins = a;
    return cert;
}

bool cone_obstruction(const Vec& u, const std::vector<Vec>& V, const std::vector<Vec>& basis) {
    const std::size_t n = u.size();
    if (V.size() != n - 1 || basis.size() != n)
        throw std::invalid_argument("cone test needs a hyperplane basis and a full basis");
    FixedSetSpec fix{FixMode::SL_REFLECTION, V, u};
    validate_fixed_set(fix);
    const Vec f = oriented_functional(V, u);
    std::vector<Vec> flipped;
    flipped.reserve(n);
    for (const Vec& v : basis) {
        const int s = sgn(dot(f, v));
        if (s == 0)
            throw DegenerateInputError("a basis vector lies in the hyperplane; side condition fails");
        flipped.push_back(s > 0 ? v : scale(Rat(-1), v));
    }
    const auto c = solve(mat_from_columns(flipped), u);
    if (!c) throw DegenerateInputError("cone test requires a linearly independent basis");
    // obstructed iff u falls outside the closed cone spanned by the flipped
    // basis; boundary coefficients do not obstruct
    for (const auto& x : *c)
        if (sgn(x) < 0) return true;
    return false;
}

// ---------------------------------------------------------------------------
// SO model

IntersectionCertificate flat_meets_fixedset_so(const FlatSpec& flat, const FixedSetSpec& fix,
                                               const QuadForm& form) {
    if (flat.mode != FixMode::SO_REFLECTION || fix.mode != FixMode::SO_REFLECTION)
        throw std::invalid_argument("flat/fixed-set mode mismatch");
    if (flat.dim() != fix.dim() || flat.dim() != form.dim())
        throw std::invalid_argument("ambient dimension mismatch");
    validate_flat(flat, &form);
    validate_fixed_set(fix, &form);

    const Vec h = oriented_functional(fix.V, fix.u);
    IntersectionCertificate cert;
    bool all_one_dimensional = true;
    for (std::size_t i = 0; i < flat.planes.size(); ++i) {
        const Vec& a = flat.planes[i][0];
        const Vec& b = flat.planes[i][1];
        const Rat ha = dot(h, a), hb = dot(h, b);
        if (sgn(ha) == 0 && sgn(hb) == 0) {
            // plane contained in the hyperplane: restriction has signature
            // (1,1), so a negative direction exists
            all_one_dimensional = false;
            const Diagonalization d = diagonalize_on(form, {a, b});
            Vec neg;
            for (std::size_t k = 0; k < d.values.size(); ++k)
                if (sgn(d.values[k]) < 0) neg = d.basis[k];
            neg = normalized_by_max(std::move(neg));
            cert.witness_vectors.push_back(neg);
            cert.margins.push_back(-form.eval(neg));
            continue;
        }
        Vec dir = sub(scale(hb, a), scale(ha, b)); // the line of the plane inside the hyperplane
        dir = normalized_by_max(std::move(dir));
        const Rat val = form.eval(dir);
        if (sgn(val) >= 0) {
            cert.verdict = CertVerdict::EMPTY;
            cert.obstruction = ObstructionTag::POSITIVE_DEFINITE_RESTRICTION;
            cert.nonempty = -1;
            cert.witness_vectors.clear();
            cert.margins.clear();
            cert.note = "plane " + std::to_string(i + 1) +
                        " meets the hyperplane where the form is nonnegative";
            return cert;
        }
        cert.witness_vectors.push_back(dir);
        cert.margins.push_back(-val);
    }
    cert.nonempty = 1;
    if (all_one_dimensional) {
        cert.verdict = CertVerdict::SINGLE_POINT;
    } else {
        cert.verdict = CertVerdict::DEGENERATE;
        cert.note = "some plane lies inside the hyperplane; intersection is "
                    "nonempty but not certified as a single point";
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Certificate re-verification

bool verify_certificate_sl(const FlatSpec& flat, const FixedSetSpec& fix,
                           const IntersectionCertificate& cert) {
    const IntersectionCertificate again = flat_meets_fixedset_sl(flat, fix);
    if (again.verdict != cert.verdict) return false;
    if (cert.verdict != CertVerdict::SINGLE_POINT) return true;
    // exact residual of the witness
    const std::size_t n = flat.dim();
    if (cert.witness_diag.size() != n) return false;
    const Mat Binv = *inverse(mat_from_columns(flat.basis));
    const Vec cu = mul(Binv, fix.u);
    for (const auto& a : cert.witness_diag)
        if (sgn(a) <= 0) return false;
    for (const auto& w : fix.V) {
        const Vec cw = mul(Binv, w);
        Rat resid(0);
        for (std::size_t i = 0; i < n; ++i) resid += cert.witness_diag[i] * cu[i] * cw[i];
        if (sgn(resid) != 0) return false;
    }
    return true;
}

bool verify_certificate_so(const FlatSpec& flat, const FixedSetSpec& fix, const QuadForm& form,
                           const IntersectionCertificate& cert) {
    const IntersectionCertificate again = flat_meets_fixedset_so(flat, fix, form);
    if (again.verdict != cert.verdict) return false;
    if (cert.nonempty != 1) return true;
    if (cert.witness_vectors.size() != flat.planes.size()) return false;
    const Vec h = oriented_functional(fix.V, fix.u);
    for (std::size_t i = 0; i < flat.planes.size(); ++i) {
        const Vec& w = cert.witness_vectors[i];
        if (is_zero(w)) return false;
        if (sgn(dot(h, w)) != 0) return false;                       // inside the hyperplane
        if (!in_span(w, {flat.planes[i][0], flat.planes[i][1]})) return false; // inside the plane
        if (sgn(form.eval(w)) >= 0) return false;                    // strictly negative
    }
    return true;
}

// ---------------------------------------------------------------------------
// Robust (interval) re-verification of SL certificates

namespace {

struct OrientedTarget {
    Vec f; // functional vanishing on V, positive on u
    Vec u;
};

bool robust_check(const Mat& B, const std::vector<OrientedTarget>& targets, const Rat& delta) {
    const std::size_t n = B.rows;
    IMat IB(n, IVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) IB[i][j] = IRat::around(B.at(i, j), delta);
    const int sB = idet(IB).certain_sign();
    if (sB == 0) return false;

    auto column_interval = [&](std::size_t j) {
        IVec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = IB[i][j];
        return col;
    };
    auto coord_sign = [&](const Vec& u, std::size_t j) {
        IMat m = IB;
        for (std::size_t i = 0; i < n; ++i) m[i][j] = IRat(u[i]);
        return idet(m).certain_sign() * sB; // sign of the j-th coordinate of u in the basis
    };

    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        const auto& tgt = targets[ti];
        if (ti == 0) {
            // hit target: every coordinate sign certain and matching the side sign
            for (std::size_t j = 0; j < n; ++j) {
                const int cs = coord_sign(tgt.u, j);
                if (cs == 0) return false;
                const int bs = idot(column_interval(j), tgt.f).certain_sign();
                if (bs == 0 || bs != cs) return false;
            }
        } else {
            // missed target: every coordinate sign certain (the solution
            // space then stays one-dimensional over the whole box) and at
            // least one coordinate certainly violates the cone
            bool obstructed = false;
            for (std::size_t j = 0; j < n; ++j) {
                const int cs = coord_sign(tgt.u, j);
                if (cs == 0) return false;
                const int bs = idot(column_interval(j), tgt.f).certain_sign();
                if (bs == 0) return false;
                if (cs != bs) obstructed = true;
            }
            if (!obstructed) return false;
        }
    }
    return true;
}

} // namespace

bool verify_sl_certificates_robust(const FlatSpec& flat, const std::vector<FixedSetSpec>& targets,
                                   const Rat& delta) {
    std::vector<OrientedTarget> ts;
    for (const auto& fix : targets) ts.push_back({oriented_functional(fix.V, fix.u), fix.u});
    return robust_check(mat_from_columns(flat.basis), ts, delta);
}

// ---------------------------------------------------------------------------
// Separating basis construction (SL model)

namespace {

Rat small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-31, 31);
    return rat(num(rng), 128);
}

// Gram-Schmidt without normalization; keeps rationality, returns columns.
std::vector<Vec> orthogonalize(const std::vector<Vec>& cols) {
    std::vector<Vec> out;
    for (Vec v : cols) {
        for (const Vec& o : out) {
            const Rat denom = dot(o, o);
            if (sgn(denom) == 0) return {};
            v = sub(v, scale(dot(v, o) / denom, o));
        }
        if (is_zero(v)) return {};
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

SlSeparationResult build_separating_basis_sl(const std::vector<FixedSetSpec>& targets,
                                             const SlBuildOptions& opts) {
    if (targets.empty()) throw std::invalid_argument("at least one target is required");
    const std::size_t n = targets[0].dim();
    if (n < 2) throw std::invalid_argument("ambient dimension must be at least 2");
    for (const auto& t : targets) {
        if (t.mode != FixMode::SL_REFLECTION) throw std::invalid_argument("targets must be SL reflections");
        if (t.dim() != n) throw std::invalid_argument("targets have mismatched dimensions");
        validate_fixed_set(t);
    }
    const std::size_t r = targets.size();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (same_span(targets[i].V, targets[j].V, n) &&
                same_span({targets[i].u}, {targets[j].u}, n))
                throw DegenerateInputError("targets " + std::to_string(i + 1) + " and " +
                                           std::to_string(j + 1) + " define the same fixed set");
    for (std::size_t i = 1; i < r; ++i)
        if (same_span(targets[i].V, targets[0].V, n))
            throw DegenerateInputError("target " + std::to_string(i + 1) +
                                       " shares its reflection hyperplane with target 1");

    const Vec g1 = oriented_functional(targets[0].V, targets[0].u);
    const Rat g1u1 = dot(g1, targets[0].u);

    // select a line inside the hit hyperplane avoiding the projected lines
    // and the other hyperplanes
    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + 12345);
    auto line_ok = [&](const Vec& ell) {
        if (is_zero(ell)) return false;
        for (std::size_t i = 1; i < r; ++i) {
            const Vec& ui = targets[i].u;
            const Vec proj = sub(ui, scale(dot(g1, ui) / g1u1, targets[0].u));
            if (rank(mat_from_rows({ell, proj})) <= 1) return false; // parallel to a projected line
            const Vec fi = oriented_functional(targets[i].V, targets[i].u);
            if (sgn(dot(fi, ell)) == 0) return false; // inside another hyperplane
        }
        return true;
    };
    Vec ell;
    {
        std::vector<Vec> cands;
        for (const Vec& w : targets[0].V) cands.push_back(w);
        for (std::size_t a = 0; a + 1 < targets[0].V.size(); ++a) {
            cands.push_back(add(targets[0].V[a], targets[0].V[a + 1]));
            cands.push_back(sub(targets[0].V[a], targets[0].V[a + 1]));
        }
        for (int extra = 0; extra < 64; ++extra) {
            Vec v(n, Rat(0));
            for (const Vec& w : targets[0].V) v = add(v, scale(small_rat(rng), w));
            cands.push_back(std::move(v));
        }
        for (auto& cand : cands)
            if (line_ok(cand)) { ell = cand; break; }
        if (ell.empty())
            throw DegenerateInputError("no admissible line inside the hit hyperplane was found");
    }

    // coordinate change: ell -> e_1, u_1 -> e_2, rest of the hyperplane -> e_3..
    std::vector<Vec> tcols = {ell, targets[0].u};
    for (const Vec& w : targets[0].V) {
        std::vector<Vec> probe = tcols;
        probe.push_back(w);
        if (rank(mat_from_rows(probe)) == tcols.size() + 1) tcols.push_back(w);
        if (tcols.size() == n) break;
    }
    if (tcols.size() != n) throw DegenerateInputError("coordinate frame construction failed");
    const Mat T = mat_from_columns(tcols);
    const Mat Tinv = *inverse(T);

    // orthogonal base basis in new coordinates, first components positive,
    // second components nonzero
    std::vector<Vec> base;
    for (int attempt = 0; attempt < 64 && base.empty(); ++attempt) {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < n; ++j) {
            Vec v(n, Rat(0));
            v[j] = 1;
            for (std::size_t i = 0; i < n; ++i) v[i] += small_rat(rng);
            cols.push_back(std::move(v));
        }
        auto orth = orthogonalize(cols);
        if (orth.size() != n) continue;
        bool ok = true;
        for (auto& v : orth) {
            v = clear_denominators(std::move(v)); // keep downstream arithmetic small
            if (sgn(v[0]) == 0 || sgn(v[1]) == 0) { ok = false; break; }
            if (sgn(v[0]) < 0) v = scale(Rat(-1), v);
        }
        if (ok) base = std::move(orth);
    }
    if (base.empty()) throw DegenerateInputError("no orthogonal base basis in general position");

    SlSeparationResult result;
    Rat lambda(1);
    for (int e = 1; e <= opts.max_lambda_log2; ++e) {
        lambda *= 2;
        std::vector<Vec> cols;
        for (const Vec& v : base) {
            Vec w = v;
            w[0] *= lambda * lambda;
            w[1] *= lambda;
            cols.push_back(clear_denominators(mul(T, w)));
        }
        FlatSpec flat{FixMode::SL_REFLECTION, std::move(cols), {}, {}};
        std::vector<IntersectionCertificate> certs;
        certs.push_back(flat_meets_fixedset_sl(flat, targets[0]));
        bool good = certs[0].verdict == CertVerdict::SINGLE_POINT;
        for (std::size_t i = 1; i < r && good; ++i) {
            certs.push_back(flat_meets_fixedset_sl(flat, targets[i]));
            good = certs.back().verdict == CertVerdict::EMPTY &&
                   certs.back().obstruction == ObstructionTag::CONE_OBSTRUCTION;
        }
        if (!good) continue;

        // verified perturbation radius by interval re-checks
        Rat delta = Rat(1) / lambda;
        bool robust = false;
        for (int h = 0; h <= opts.max_delta_halvings; ++h) {
            if (verify_sl_certificates_robust(flat, targets, delta)) { robust = true; break; }
            delta /= 4;
        }
        if (!robust)
            throw SearchCapExceeded("no verifiable perturbation radius found");
        result.flat = std::move(flat);
        result.lambda = lambda;
        result.delta = delta;
        result.certificates = std::move(certs);
        return result;
    }
    throw SearchCapExceeded("scaling cap 2^" + std::to_string(opts.max_lambda_log2) +
                            " reached without a verified certificate pattern");
}

// ---------------------------------------------------------------------------
// Separating decomposition construction (SO model)

SoSeparationResult build_separating_decomposition_so(const std::vector<FixedSetSpec>& targets,
                                                     const QuadForm& form) {
    if (targets.empty()) throw std::invalid_argument("at least one target is required");
    const std::size_t n = form.dim();
    const Signature ambient = signature(form);
    if (ambient.n_zero != 0) throw std::invalid_argument("ambient form must be nondegenerate");
    const long p = ambient.n_neg;
    if (p < 2) throw HypothesisError("the construction requires negative index p >= 2");
    for (const auto& t : targets) {
        if (t.mode != FixMode::SO_REFLECTION) throw std::invalid_argument("targets must be SO reflections");
        if (t.dim() != n) throw std::invalid_argument("targets have mismatched dimensions");
        validate_fixed_set(t, &form);
    }
    const std::size_t r = targets.size();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (same_span(targets[i].V, targets[j].V, n))
                throw DegenerateInputError("targets " + std::to_string(i + 1) + " and " +
                                           std::to_string(j + 1) + " define the same fixed set");
    if (sgn(form.eval(targets[0].u)) <= 0)
        throw HypothesisError("target 1 must have a positive-definite complement line");

    // rational isotropic vector inside the hit hyperplane, avoiding the others
    const Diagonalization diag = diagonalize_on(form, targets[0].V);
    std::vector<Vec> others;
    for (std::size_t i = 1; i < r; ++i) others.push_back(oriented_functional(targets[i].V, targets[i].u));
    // basic candidates: the two isotropic lines of every hyperbolic pair of
    // diagonal directions whose value ratio is a rational square
    std::vector<Vec> pool;
    for (std::size_t j = 0; j < diag.values.size(); ++j) {
        if (sgn(diag.values[j]) <= 0) continue;
        for (std::size_t k = 0; k < diag.values.size(); ++k) {
            if (sgn(diag.values[k]) >= 0) continue;
            Rat root;
            if (!rat_is_square(-diag.values[k] / diag.values[j], &root)) continue;
            pool.push_back(add(scale(root, diag.basis[j]), diag.basis[k]));
            pool.push_back(sub(scale(root, diag.basis[j]), diag.basis[k]));
        }
    }
    const bool any_square = !pool.empty();
    // sums and differences of orthogonal isotropic vectors are isotropic again
    const std::size_t basics = pool.size();
    for (std::size_t a = 0; a < basics; ++a)
        for (std::size_t b = a + 1; b < basics; ++b) {
            if (sgn(form.eval(pool[a], pool[b])) != 0) continue;
            pool.push_back(add(pool[a], pool[b]));
            pool.push_back(sub(pool[a], pool[b]));
        }
    Vec v0;
    for (auto& cand : pool) {
        if (is_zero(cand)) continue;
        bool ok = true;
        for (const Vec& h : others)
            if (sgn(dot(h, cand)) == 0) { ok = false; break; }
        if (ok) { v0 = std::move(cand); break; }
    }
    if (v0.empty()) {
        if (!any_square)
            throw UnsupportedInstanceError(
                "no rational isotropic vector in the hit hyperplane (no square diagonal ratio)");
        throw UnsupportedInstanceError(
            "all rational isotropic candidates lie inside excluded hyperplanes");
    }

    // negative direction inside the hit hyperplane
    Vec negdir;
    for (std::size_t m = 0; m < diag.values.size(); ++m) {
        if (sgn(diag.values[m]) < 0 && sgn(form.eval(v0, diag.basis[m])) == 0) {
            negdir = diag.basis[m];
            break;
        }
    }
    if (negdir.empty()) {
        for (std::size_t m = 0; m < diag.values.size(); ++m)
            if (sgn(diag.values[m]) < 0) { negdir = diag.basis[m]; break; }
    }
    if (negdir.empty()) throw std::logic_error("no negative direction in the hit hyperplane");

    const Vec& w = targets[0].u;
    Vec v1;
    Rat eps(1);
    for (int step = 0; step <= 128 && v1.empty(); ++step, eps /= 2) {
        for (int sign_choice : {1, -1}) {
            Vec cand = add(v0, scale(sign_choice * eps, negdir));
            if (sgn(form.eval(cand)) >= 0) continue;
            bool ok = true;
            for (const Vec& h : others) {
                const Rat hv = dot(h, cand), hw = dot(h, w);
                if (sgn(hv) == 0 && sgn(hw) == 0) { ok = false; break; } // plane inside V_i
                const Vec z = sub(scale(hw, cand), scale(hv, w));
                if (is_zero(z) || sgn(form.eval(z)) <= 0) { ok = false; break; }
            }
            if (ok) { v1 = std::move(cand); break; }
        }
    }
    if (v1.empty())
        throw SearchCapExceeded("no admissible perturbation of the isotropic vector was found");

    // complete by diagonalizing the orthogonal complement of span(v1, w)
    std::vector<Vec> orth_rows = {mul(form.m, v1), mul(form.m, w)};
    const auto complement = kernel_basis(mat_from_rows(orth_rows));
    const Diagonalization comp = diagonalize_on(form, complement);
    std::vector<Vec> negs, poss;
    for (std::size_t i = 0; i < comp.values.size(); ++i) {
        if (sgn(comp.values[i]) < 0) negs.push_back(comp.basis[i]);
        else if (sgn(comp.values[i]) > 0) poss.push_back(comp.basis[i]);
        else throw std::logic_error("degenerate complement in plane completion");
    }
    if (long(negs.size()) != p - 1) throw std::logic_error("unexpected negative index in complement");
    if (negs.size() > poss.size())
        throw std::invalid_argument("form must have negative index at most its positive index");

    FlatSpec flat;
    flat.mode = FixMode::SO_REFLECTION;
    flat.planes.push_back({v1, w});
    for (std::size_t i = 0; i + 1 <= negs.size(); ++i) flat.planes.push_back({negs[i], poss[i]});
    for (std::size_t i = negs.size(); i < poss.size(); ++i) flat.rest.push_back(poss[i]);

    SoSeparationResult result;
    result.certificates.push_back(flat_meets_fixedset_so(flat, targets[0], form));
    if (result.certificates[0].nonempty != 1)
        throw std::logic_error("constructed flat fails to meet target 1");
    for (std::size_t i = 1; i < r; ++i) {
        result.certificates.push_back(flat_meets_fixedset_so(flat, targets[i], form));
        if (result.certificates.back().verdict != CertVerdict::EMPTY)
            throw std::logic_error("constructed flat fails to miss target " + std::to_string(i + 1));
    }
    result.flat = std::move(flat);
    return result;
}

} // namespace latdim
