#include "latdim/acceptance.hpp"

#include "latdim/bounds.hpp"
#include "latdim/flats.hpp"
#include "latdim/pairs.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

namespace latdim {

namespace {

using Clock = std::chrono::steady_clock;

struct Failures {
    int count = 0;
    std::ostringstream detail;

    void fail(const std::string& what) {
        ++count;
        if (count <= 8) detail << (count == 1 ? "" : "; ") << what;
    }
    std::string str(const std::string& ok_note = "") const {
        if (count == 0) return ok_note;
        std::string s = detail.str();
        if (count > 8) s += "; ... (" + std::to_string(count) + " failures total)";
        return s;
    }
};

std::vector<GroupSpec> sweep_n(Family f, int lo, int hi) {
    std::vector<GroupSpec> out;
    for (int n = lo; n <= hi; ++n) {
        try {
            out.push_back(GroupSpec::make_n(f, n));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

std::vector<GroupSpec> sweep_pq(Family f, int p_lo, int sum_hi) {
    std::vector<GroupSpec> out;
    for (int p = p_lo; 2 * p <= sum_hi; ++p)
        for (int q = p; p + q <= sum_hi; ++q) {
            try {
                out.push_back(GroupSpec::make_pq(f, p, q));
            } catch (const std::invalid_argument&) {
            }
        }
    return out;
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

EigenPattern so_split(std::pair<long, long> ss, std::pair<long, long> st) {
    EigenPattern p;
    p.family = Family::SO_pq;
    p.split_s = ss;
    p.split_t = st;
    p.canonicalize();
    return p;
}

// Expected maximizer inventory for SO(p,q): the two orientations of the
// reflection type, plus their determinant-minus-one mirror types when p = q.
std::vector<EigenPattern> so_pq_expected_maximizers(const GroupSpec& g) {
    const long p = g.p, q = g.q;
    std::vector<EigenPattern> expect = {
        so_split({0, 1}, {p, q - 1}),
        so_split({p, q - 1}, {0, 1}),
    };
    if (p == q) {
        expect.push_back(so_split({1, 0}, {p - 1, q}));
        expect.push_back(so_split({p - 1, q}, {1, 0}));
    }
    std::sort(expect.begin(), expect.end());
    return expect;
}

// ---- criterion 1 -----------------------------------------------------------

CriterionResult criterion_tables() {
    const auto t0 = Clock::now();
    Failures f;
    auto check_rows = [&](const std::vector<GroupSpec>& specs) {
        for (const auto& g : specs) {
            const DimRecord d = dims(g);
            const long n = g.n, p = g.p, q = g.q;
            long eg = -1, ek = -1, es = -1, er = -1;
            switch (g.family) {
                case Family::SL_C: eg = 2 * (n * n - 1); ek = n * n - 1; es = n * n - 1; er = n - 1; break;
                case Family::SO_C: eg = n * (n - 1); ek = n * (n - 1) / 2; es = n * (n - 1) / 2; er = n / 2; break;
                case Family::Sp_C: eg = 2 * n * (2 * n + 1); ek = n * (2 * n + 1); es = n * (2 * n + 1); er = n; break;
                case Family::SL_R: eg = n * n - 1; ek = n * (n - 1) / 2; es = n * (n - 1) / 2 + n - 1; er = n - 1; break;
                case Family::SL_H: eg = 4 * n * n - 1; ek = 2 * n * n + n; es = 2 * n * n - n - 1; er = n - 1; break;
                case Family::SO_pq: eg = (p + q) * (p + q - 1) / 2; ek = (p * p + q * q - p - q) / 2; es = p * q; er = p; break;
                case Family::SU_pq: eg = (p + q) * (p + q) - 1; ek = p * p + q * q - 1; es = 2 * p * q; er = p; break;
                case Family::Sp_pq: eg = (p + q) * (2 * p + 2 * q + 1); ek = 2 * p * p + 2 * q * q + p + q; es = 4 * p * q; er = p; break;
                case Family::Sp_R: eg = 2 * n * n + n; ek = n * n; es = n * n + n; er = n; break;
                case Family::SO_star: eg = 2 * n * n - n; ek = n * n; es = n * n - n; er = n / 2; break;
            }
            if (d.dim_g != eg || d.dim_k != ek || d.dim_s != es || d.rank_r != er)
                f.fail(g.display() + " table row mismatch");
            if (d.dim_s != d.dim_g - d.dim_k) f.fail(g.display() + " dim S != dim G - dim K");
            if (vcd_lower_bound(g) != d.dim_s - d.rank_r)
                f.fail(g.display() + " vcd bound != dim S - rank");
        }
    };
    for (Family fam : {Family::SL_C, Family::SO_C, Family::Sp_C, Family::SL_R, Family::SL_H,
                       Family::Sp_R, Family::SO_star})
        check_rows(sweep_n(fam, 1, 12));
    for (Family fam : {Family::SO_pq, Family::SU_pq, Family::Sp_pq})
        check_rows(sweep_pq(fam, 1, 12));
    CriterionResult r{1, "table-reproduction", f.count == 0, false, f.str(), 0};
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

// ---- criteria 2 and 3 ------------------------------------------------------

struct GapSweep {
    std::vector<GapReport> reports;
    Failures maxima;   // criterion 2
    Failures verdicts; // criterion 3
};

void sweep_family(Family fam, const std::vector<GroupSpec>& specs, Verdict expected_verdict,
                  GapSweep& out) {
    for (const auto& g : specs) {
        GapReport r = gap_report(g);
        if (r.verdict == Verdict::EXCEEDS)
            out.verdicts.fail(g.display() + " EXCEEDS the vcd bound");
        else if (r.verdict != expected_verdict)
            out.verdicts.fail(g.display() + " verdict " + verdict_name(r.verdict) + " (expected " +
                              verdict_name(expected_verdict) + ")");
        if (r.closed_form_max && !r.closed_form_agrees)
            out.maxima.fail(g.display() + " brute max " + std::to_string(r.max_fixed_dim) +
                            " != closed form " + std::to_string(*r.closed_form_max));
        if (fam == Family::SL_R) {
            const std::vector<EigenPattern> expect = {
                st_pattern(Family::SL_R, {}, 1, g.n - 1)};
            if (r.maximizers != expect)
                out.maxima.fail(g.display() + " maximizer set is not the single reflection class");
        }
        if (fam == Family::SO_pq && g.p >= 2 && g.p + g.q >= 5) {
            if (r.maximizers != so_pq_expected_maximizers(g))
                out.maxima.fail(g.display() + " maximizer set differs from the reflection types");
        }
        out.reports.push_back(std::move(r));
    }
}

GapSweep run_gap_sweeps() {
    GapSweep out;
    sweep_family(Family::SL_C, sweep_n(Family::SL_C, 2, 14), Verdict::STRICT_GAP, out);
    sweep_family(Family::SO_C, sweep_n(Family::SO_C, 5, 14), Verdict::STRICT_GAP, out);
    sweep_family(Family::Sp_C, sweep_n(Family::Sp_C, 2, 14), Verdict::STRICT_GAP, out);
    sweep_family(Family::SL_H, sweep_n(Family::SL_H, 3, 14), Verdict::STRICT_GAP, out);
    sweep_family(Family::SU_pq, sweep_pq(Family::SU_pq, 2, 14), Verdict::STRICT_GAP, out);
    sweep_family(Family::Sp_pq, sweep_pq(Family::Sp_pq, 2, 14), Verdict::STRICT_GAP, out);
    sweep_family(Family::Sp_R, sweep_n(Family::Sp_R, 3, 14), Verdict::STRICT_GAP, out);
    sweep_family(Family::SO_star, sweep_n(Family::SO_star, 2, 14), Verdict::STRICT_GAP, out);
    sweep_family(Family::SL_R, sweep_n(Family::SL_R, 3, 14), Verdict::EQUALITY, out);
    sweep_family(Family::SO_pq, sweep_pq(Family::SO_pq, 2, 14), Verdict::EQUALITY, out);

    // remaining valid groups in the parameter box: no pinned verdict, but the
    // never-EXCEEDS guard applies everywhere and the closed forms without a
    // range restriction still bind
    std::vector<GroupSpec> extra = {
        GroupSpec::make_n(Family::SL_R, 2),   GroupSpec::make_n(Family::SO_C, 3),
        GroupSpec::make_n(Family::Sp_C, 1),   GroupSpec::make_n(Family::SL_H, 2),
        GroupSpec::make_n(Family::Sp_R, 1),   GroupSpec::make_n(Family::Sp_R, 2),
    };
    for (int q = 2; q <= 13; ++q) {
        extra.push_back(GroupSpec::make_pq(Family::SO_pq, 1, q));
        extra.push_back(GroupSpec::make_pq(Family::SU_pq, 1, q));
        extra.push_back(GroupSpec::make_pq(Family::Sp_pq, 1, q));
    }
    for (const auto& g : extra) {
        GapReport r = gap_report(g);
        if (r.verdict == Verdict::EXCEEDS)
            out.verdicts.fail(g.display() + " EXCEEDS the vcd bound");
        if (r.closed_form_max && !r.closed_form_agrees)
            out.maxima.fail(g.display() + " brute max " + std::to_string(r.max_fixed_dim) +
                            " != closed form " + std::to_string(*r.closed_form_max));
        out.reports.push_back(std::move(r));
    }
    return out;
}

// ---- criterion 4 -----------------------------------------------------------

CriterionResult criterion_pairs() {
    const auto t0 = Clock::now();
    Failures f;
    for (int n = 4; n <= 12; ++n) {
        const auto r = verify_pair_bound(GroupSpec::make_n(Family::SL_R, n));
        if (!r.bound_holds || r.max_pair_dim != n * (n - 1) / 2 + 2 - n)
            f.fail("SL(" + std::to_string(n) + ",R) pair bound");
    }
    for (int p = 2; p <= 6; ++p)
        for (int q = std::max(p, 5 - p); p + q <= 12; ++q) {
            const auto r = verify_pair_bound(GroupSpec::make_pq(Family::SO_pq, p, q));
            const long expect = std::max({(p - 2) * q, (p - 1) * (q - 1), p * (q - 2)});
            if (!r.bound_holds || r.max_pair_dim != expect)
                f.fail(r.group.display() + " pair bound");
        }
    CriterionResult r{4, "pair-intersection-bounds", f.count == 0, false, f.str(), 0};
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

// ---- criterion 5 -----------------------------------------------------------

Vec random_small_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Vec v(n);
    for (auto& x : v) x = rat(num(rng), den(rng));
    return v;
}

FixedSetSpec random_sl_reflection(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vec> V;
    for (;;) {
        V.clear();
        for (std::size_t k = 0; k + 1 < n; ++k) V.push_back(random_small_vec(rng, n));
        if (rank(mat_from_rows(V)) == n - 1) break;
    }
    for (;;) {
        Vec u = random_small_vec(rng, n);
        auto all = V;
        all.push_back(u);
        if (rank(mat_from_rows(all)) == n) return {FixMode::SL_REFLECTION, V, u};
    }
}

CriterionResult criterion_sl_geometry() {
    const auto t0 = Clock::now();
    Failures f;
    std::mt19937_64 rng(20240UL);
    std::uniform_int_distribution<long> pert(-64, 64);
    int degenerate_logged = 0;
    long trials_run = 0;
    for (int n = 4; n <= 7; ++n) {
        for (int r = 1; r <= 4; ++r) {
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<FixedSetSpec> targets;
                for (int i = 0; i < r; ++i) targets.push_back(random_sl_reflection(rng, n));
                SlSeparationResult res;
                try {
                    res = build_separating_basis_sl(targets);
                } catch (const DegenerateInputError&) {
                    ++degenerate_logged;
                    continue;
                } catch (const std::exception& e) {
                    f.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " trial " +
                           std::to_string(trial) + ": " + e.what());
                    continue;
                }
                ++trials_run;
                if (res.certificates[0].verdict != CertVerdict::SINGLE_POINT)
                    f.fail("missing SINGLE_POINT at n=" + std::to_string(n));
                for (std::size_t i = 1; i < targets.size(); ++i)
                    if (res.certificates[i].verdict != CertVerdict::EMPTY)
                        f.fail("missing EMPTY at n=" + std::to_string(n));
                if (!verify_certificate_sl(res.flat, targets[0], res.certificates[0]))
                    f.fail("witness re-verification failed at n=" + std::to_string(n));
                if (sgn(res.delta) <= 0) f.fail("nonpositive perturbation radius");
                // verdict stability under 50 random perturbations of max-norm <= delta
                for (int k = 0; k < 50; ++k) {
                    FlatSpec perturbed = res.flat;
                    for (auto& v : perturbed.basis)
                        for (auto& x : v) x += res.delta * rat(pert(rng), 64);
                    for (std::size_t i = 0; i < targets.size(); ++i) {
                        const auto cert = flat_meets_fixedset_sl(perturbed, targets[i]);
                        if (cert.verdict != res.certificates[i].verdict) {
                            f.fail("perturbation flipped a verdict at n=" + std::to_string(n) +
                                   " r=" + std::to_string(r));
                            k = 50;
                            break;
                        }
                    }
                }
            }
        }
    }
    std::string note = std::to_string(trials_run) + " trials";
    if (degenerate_logged > 0)
        note += ", " + std::to_string(degenerate_logged) + " degenerate trials logged and skipped";
    CriterionResult r{5, "separating-flats-sl", f.count == 0, false, f.str(note), 0};
    if (f.count == 0) r.detail = note;
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

// ---- criterion 6 -----------------------------------------------------------

FixedSetSpec so_reflection_of(const QuadForm& form, const Vec& u) {
    const Vec qu = mul(form.m, u);
    auto V = kernel_basis(mat_from_rows({qu}));
    return {FixMode::SO_REFLECTION, std::move(V), u};
}

Vec unit_vec(std::size_t n, std::size_t i, long scale_num = 1) {
    Vec v(n, Rat(0));
    v[i] = scale_num;
    return v;
}

CriterionResult criterion_so_geometry() {
    const auto t0 = Clock::now();
    Failures f;

    // bundled instance sets with standard rational isotropic vectors
    struct Instance { int p, q; std::vector<Vec> lines; };
    std::vector<Instance> instances;
    for (auto [p, q] : {std::pair<int, int>{2, 3}, {2, 4}, {3, 3}}) {
        const std::size_t n = p + q;
        Instance a{p, q, {unit_vec(n, n - 1), unit_vec(n, n - 2)}};
        instances.push_back(a);
        Instance b{p, q, {unit_vec(n, n - 1), unit_vec(n, n - 2), unit_vec(n, p)}};
        instances.push_back(b);
        // a non-coordinate positive line as the hit target
        Vec mixed(n, Rat(0));
        mixed[n - 1] = 2;
        mixed[0] = 1; // value 4 - 1 = 3 > 0
        Instance c{p, q, {mixed, unit_vec(n, p)}};
        instances.push_back(c);
    }
    for (const auto& inst : instances) {
        const QuadForm form = QuadForm::standard_pq(inst.p, inst.q);
        std::vector<FixedSetSpec> targets;
        for (const auto& u : inst.lines) targets.push_back(so_reflection_of(form, u));
        try {
            const auto res = build_separating_decomposition_so(targets, form);
            if (res.certificates[0].nonempty != 1)
                f.fail("hit certificate not nonempty at (" + std::to_string(inst.p) + "," +
                       std::to_string(inst.q) + ")");
            for (std::size_t i = 1; i < targets.size(); ++i)
                if (res.certificates[i].verdict != CertVerdict::EMPTY)
                    f.fail("miss certificate not EMPTY at (" + std::to_string(inst.p) + "," +
                           std::to_string(inst.q) + ")");
            for (std::size_t i = 0; i < targets.size(); ++i)
                if (!verify_certificate_so(res.flat, targets[i], form, res.certificates[i]))
                    f.fail("certificate re-verification failed");
        } catch (const std::exception& e) {
            f.fail(std::string("construction failed: ") + e.what());
        }
    }

    // cone soundness, 200+ random cases, zero violations
    {
        std::mt19937_64 rng(555);
        int sound_checked = 0;
        for (int trial = 0; sound_checked < 200 && trial < 2000; ++trial) {
            const std::size_t n = 3 + trial % 3;
            FixedSetSpec fix = random_sl_reflection(rng, n);
            std::vector<Vec> basis;
            Mat b(n, n);
            do {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) b.at(i, j) = random_small_vec(rng, 1)[0];
            } while (sgn(det(b)) == 0);
            basis.clear();
            for (std::size_t j = 0; j < n; ++j) {
                Vec col(n);
                for (std::size_t i = 0; i < n; ++i) col[i] = b.at(i, j);
                basis.push_back(std::move(col));
            }
            bool obstructed;
            try {
                obstructed = cone_obstruction(fix.u, fix.V, basis);
            } catch (const DegenerateInputError&) {
                continue;
            }
            if (!obstructed) continue;
            ++sound_checked;
            const auto cert =
                flat_meets_fixedset_sl({FixMode::SL_REFLECTION, basis, {}, {}}, fix);
            if (cert.verdict != CertVerdict::EMPTY) f.fail("cone soundness violation");
        }
        if (sound_checked < 200) f.fail("cone soundness ensemble too small");
    }

    // Sylvester invariance, 200 random congruences
    {
        std::mt19937_64 rng(77);
        std::uniform_int_distribution<int> num(-5, 5);
        const QuadForm q23 = QuadForm::standard_pq(2, 3);
        for (int trial = 0; trial < 200; ++trial) {
            Mat m(5, 5);
            do {
                for (std::size_t i = 0; i < 5; ++i)
                    for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = rat(num(rng), 1 + int(rng() % 3));
            } while (sgn(det(m)) == 0);
            const QuadForm congruent(mul(transpose(m), mul(q23.m, m)));
            if (!(signature(congruent) == Signature{2, 0, 3})) f.fail("Sylvester invariance violation");
        }
    }

    CriterionResult r{6, "separating-flats-so", f.count == 0, false, f.str(), 0};
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& log) {
    std::vector<CriterionResult> results;
    auto report = [&](CriterionResult r) {
        log << "[" << r.index << "] " << r.name << " ";
        for (std::size_t pad = r.name.size(); pad < 28; ++pad) log << ".";
        log << (r.informational ? " NOTE" : (r.pass ? " PASS" : " FAIL"));
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.0f ms)", r.ms);
        log << buf;
        if (!r.detail.empty()) log << "  -- " << r.detail;
        log << "\n" << std::flush;
        results.push_back(std::move(r));
    };

    report(criterion_tables());

    const auto t0 = Clock::now();
    GapSweep sweep = run_gap_sweeps();
    const double sweep_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report({2, "maxima-reproduction", sweep.maxima.count == 0, false,
            sweep.maxima.str(std::to_string(sweep.reports.size()) + " groups swept"), sweep_ms});
    report({3, "gap-verdicts", sweep.verdicts.count == 0, false,
            sweep.verdicts.str("no EXCEEDS verdicts"), 0});

    report(criterion_pairs());
    report(criterion_sl_geometry());
    report(criterion_so_geometry());

    report({7, "headline-substitution", true, true,
            "the headline equality of geometric and cohomological dimension concerns infinite "
            "group actions and is not desk-reproducible; criteria 1-6 are its computable skeleton",
            0});
    return results;
}

int acceptance_failures(const std::vector<CriterionResult>& results) {
    int fails = 0;
    for (const auto& r : results)
        if (!r.informational && !r.pass) ++fails;
    return fails;
}

} // namespace latdim
