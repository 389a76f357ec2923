// latdim command-line front end.
//
// Subcommands:
//   tables      dimension/rank table sweeps
//   vcd         vcd lower bound of one group
//   maxfix      exhaustive fixed-set dimension maximum of one group
//   verify-gap  gap verdicts across a parameter sweep
//   pairs       pair intersection bounds across a sweep
//   flat-demo   separating flat constructions from a target file
//   selftest    the full acceptance suite
//
// Output: --format md (default) or json.  JSON reports are wrapped in an
// envelope {command, inputs, results, status, timing_ms}.
//
// Exit codes: 0 ok, 1 error, 2 hypothesis failure, 3 unsupported instance.
//
// Environment: LATDIM_MAX_PATTERNS overrides the enumeration guard.

#include "latdim/acceptance.hpp"
#include "latdim/serialize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace latdim;

namespace {

using Clock = std::chrono::steady_clock;

struct Envelope {
    std::string command;
    Json inputs = Json::object();
    Json results;
    std::string status = "OK";
    double ms = 0;

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["inputs"] = inputs;
        if (status == "OK") j["results"] = results;
        j["status"] = status;
        j["timing_ms"] = ms;
        return j;
    }
};

ParamRange parse_range(const std::string& s) {
    const auto dots = s.find("..");
    ParamRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(s);
    } else {
        r.lo = std::stoi(s.substr(0, dots));
        r.hi = std::stoi(s.substr(dots + 2));
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + s + "'");
    return r;
}

BoundsOptions bounds_options_from_env() {
    BoundsOptions opts;
    if (const char* env = std::getenv("LATDIM_MAX_PATTERNS")) {
        const long long v = std::atoll(env);
        if (v > 0) opts.max_patterns = static_cast<std::uint64_t>(v);
    }
    return opts;
}

std::vector<GroupSpec> sweep(Family f, const std::string& n_range, const std::string& p_range,
                             const std::string& q_range) {
    std::vector<GroupSpec> out;
    if (family_uses_pq(f)) {
        if (p_range.empty() || q_range.empty())
            throw std::invalid_argument(family_display(f) + " needs --p and --q");
        const ParamRange pr = parse_range(p_range), qr = parse_range(q_range);
        for (int p = pr.lo; p <= pr.hi; ++p)
            for (int q = std::max(p, qr.lo); q <= qr.hi; ++q) {
                try {
                    out.push_back(GroupSpec::make_pq(f, p, q));
                } catch (const std::invalid_argument&) {
                }
            }
    } else {
        if (n_range.empty()) throw std::invalid_argument(family_display(f) + " needs --n");
        const ParamRange nr = parse_range(n_range);
        for (int n = nr.lo; n <= nr.hi; ++n) {
            try {
                out.push_back(GroupSpec::make_n(f, n));
            } catch (const std::invalid_argument&) {
            }
        }
    }
    if (out.empty()) throw std::invalid_argument("no valid group in the requested range");
    return out;
}

GroupSpec single_group(Family f, const std::string& n, const std::string& p, const std::string& q) {
    if (family_uses_pq(f)) {
        if (p.empty() || q.empty()) throw std::invalid_argument(family_display(f) + " needs --p and --q");
        return GroupSpec::make_pq(f, std::stoi(p), std::stoi(q));
    }
    if (n.empty()) throw std::invalid_argument(family_display(f) + " needs --n");
    return GroupSpec::make_n(f, std::stoi(n));
}

void emit(const Envelope& env, const std::string& format, const std::string& md_text) {
    if (format == "json")
        std::cout << env.to_json().dump(2) << "\n";
    else
        std::cout << md_text;
}

std::vector<FixedSetSpec> load_targets(const std::string& path, FixMode mode,
                                       const QuadForm* form) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open target file '" + path + "'");
    Json j = Json::parse(in);
    std::vector<FixedSetSpec> targets;
    for (const auto& t : j.at("targets")) {
        if (mode == FixMode::SO_REFLECTION && !t.contains("V")) {
            // convenience: derive the hyperplane as the orthogonal complement
            FixedSetSpec fix;
            fix.mode = mode;
            fix.u = vec_from_json(t.at("u"));
            fix.V = kernel_basis(mat_from_rows({mul(form->m, fix.u)}));
            targets.push_back(std::move(fix));
        } else {
            targets.push_back(fixed_set_from_json(t, mode));
        }
    }
    if (targets.empty()) throw std::invalid_argument("target file lists no targets");
    return targets;
}

int run(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for fixed-point dimensions and separating flats "
                 "in classical symmetric spaces"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    std::string format = "md";
    app.add_option("--format", format, "output format: md or json")
        ->check(CLI::IsMember({"md", "json"}));

    std::string family_tok, n_range, p_range, q_range, targets_path, mode_str;
    bool parity_strict = false;

    auto add_family_opts = [&](CLI::App* sub, bool ranges) {
        sub->add_option("family", family_tok, "family token (sl_c, so_c, sp_c, sl_r, sl_h, so_pq, su_pq, sp_pq, sp_r, so_star)")
            ->required();
        const char* n_help = ranges ? "n or n range A..B" : "parameter n";
        const char* p_help = ranges ? "p or p range A..B" : "parameter p";
        const char* q_help = ranges ? "q or q range A..B" : "parameter q";
        sub->add_option("--n", n_range, n_help);
        sub->add_option("--p", p_range, p_help);
        sub->add_option("--q", q_range, q_help);
    };

    auto* tables = app.add_subcommand("tables", "dimension and rank table sweep");
    add_family_opts(tables, true);
    auto* vcd = app.add_subcommand("vcd", "vcd lower bound of one group");
    add_family_opts(vcd, false);
    auto* maxfix = app.add_subcommand("maxfix", "exhaustive fixed-set dimension maximum");
    add_family_opts(maxfix, false);
    maxfix->add_flag("--parity-strict", parity_strict,
                     "restrict to determinant-one realizable patterns");
    auto* gap = app.add_subcommand("verify-gap", "gap verdicts across a sweep");
    add_family_opts(gap, true);
    auto* pairs_cmd = app.add_subcommand("pairs", "pair intersection bounds across a sweep");
    add_family_opts(pairs_cmd, true);
    auto* fd = app.add_subcommand("flat-demo", "separating flat construction from a target file");
    fd->add_option("mode", mode_str, "sl or so")->required()->check(CLI::IsMember({"sl", "so"}));
    fd->add_option("--n", n_range, "ambient dimension (sl mode)");
    fd->add_option("--p", p_range, "negative index (so mode)");
    fd->add_option("--q", q_range, "positive index (so mode)");
    fd->add_option("--targets", targets_path, "JSON file with reflection targets")->required();
    auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);

    Envelope env;
    const auto t0 = Clock::now();
    std::ostringstream md;

    if (selftest->parsed()) {
        env.command = "selftest";
        // in JSON mode stream progress to stderr so stdout stays parseable
        const auto results = run_acceptance(format == "json" ? std::cerr : std::cout);
        const int fails = acceptance_failures(results);
        if (format == "json") {
            Json arr = Json::array();
            for (const auto& r : results)
                arr.push_back(Json{{"index", r.index},
                                   {"name", r.name},
                                   {"result", r.informational ? "NOTE" : (r.pass ? "PASS" : "FAIL")},
                                   {"detail", r.detail},
                                   {"ms", r.ms}});
            env.results = arr;
            env.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
            std::cout << env.to_json().dump(2) << "\n";
        }
        return fails > 0 ? 1 : 0;
    }

    const BoundsOptions bopts = bounds_options_from_env();

    if (tables->parsed()) {
        env.command = "tables";
        env.inputs = {{"family", family_tok}, {"n", n_range}, {"p", p_range}, {"q", q_range}};
        const Family f = family_from_token(family_tok);
        Json rows = Json::array();
        md << "| group | dim G | dim K | dim S | rank | vcd bound |\n";
        md << "|---|---|---|---|---|---|\n";
        for (const auto& g : sweep(f, n_range, p_range, q_range)) {
            const DimRecord d = dims(g);
            Json row = to_json(g);
            row["dim_g"] = d.dim_g;
            row["dim_k"] = d.dim_k;
            row["dim_s"] = d.dim_s;
            row["rank_r"] = d.rank_r;
            row["vcd_lower_bound"] = vcd_lower_bound(g);
            row["rank_one"] = is_rank_one(g);
            row["maximal_compact"] = maximal_compact_name(g);
            rows.push_back(row);
            md << "| " << g.display() << " | " << d.dim_g << " | " << d.dim_k << " | " << d.dim_s
               << " | " << d.rank_r << " | " << vcd_lower_bound(g) << " |\n";
        }
        env.results = rows;
    } else if (vcd->parsed()) {
        env.command = "vcd";
        env.inputs = {{"family", family_tok}, {"n", n_range}, {"p", p_range}, {"q", q_range}};
        const GroupSpec g = single_group(family_from_token(family_tok), n_range, p_range, q_range);
        const DimRecord d = dims(g);
        env.results = {{"group", to_json(g)},
                       {"vcd_lower_bound", vcd_lower_bound(g)},
                       {"dim_s", d.dim_s},
                       {"rank_r", d.rank_r},
                       {"rank_one", is_rank_one(g)}};
        md << g.display() << ": vcd lower bound " << vcd_lower_bound(g) << " (dim S " << d.dim_s
           << ", rank " << d.rank_r << ")\n";
    } else if (maxfix->parsed()) {
        env.command = "maxfix";
        env.inputs = {{"family", family_tok}, {"n", n_range}, {"p", p_range}, {"q", q_range},
                      {"parity_strict", parity_strict}};
        const GroupSpec g = single_group(family_from_token(family_tok), n_range, p_range, q_range);
        BoundsOptions opts = bopts;
        opts.enum_opts.parity_strict = parity_strict;
        const GapReport r = gap_report(g, opts);
        env.results = to_json(r);
        md << g.display() << ": max fixed-set dimension " << r.max_fixed_dim << " (vcd bound "
           << r.vcd_bound << ", gap " << r.gap << ", " << verdict_name(r.verdict) << ")\n";
        md << "maximizers:\n";
        for (const auto& m : r.maximizers)
            md << "  " << m.display() << "  -> " << centralizer_shape(g, m).display() << "\n";
        if (r.closed_form_max && !r.closed_form_agrees)
            md << "WARNING: closed-form prediction " << *r.closed_form_max
               << " disagrees with the exhaustive maximum\n";
    } else if (gap->parsed()) {
        env.command = "verify-gap";
        env.inputs = {{"family", family_tok}, {"n", n_range}, {"p", p_range}, {"q", q_range}};
        const Family f = family_from_token(family_tok);
        Json rows = Json::array();
        md << "| group | vcd bound | max fix dim | gap | verdict | closed form |\n";
        md << "|---|---|---|---|---|---|\n";
        bool all_agree = true;
        for (const auto& g : sweep(f, n_range, p_range, q_range)) {
            const GapReport r = gap_report(g, bopts);
            rows.push_back(to_json(r));
            md << "| " << g.display() << " | " << r.vcd_bound << " | " << r.max_fixed_dim << " | "
               << r.gap << " | " << verdict_name(r.verdict) << " | "
               << (r.closed_form_max ? std::to_string(*r.closed_form_max) : std::string("-"))
               << (r.closed_form_agrees ? "" : " (MISMATCH)") << " |\n";
            if (!r.closed_form_agrees) all_agree = false;
        }
        env.results = rows;
        if (!all_agree) md << "WARNING: closed-form mismatches present\n";
    } else if (pairs_cmd->parsed()) {
        env.command = "pairs";
        env.inputs = {{"family", family_tok}, {"n", n_range}, {"p", p_range}, {"q", q_range}};
        const Family f = family_from_token(family_tok);
        Json rows = Json::array();
        md << "| group | vcd bound | max pair dim | holds |\n|---|---|---|---|\n";
        for (const auto& g : sweep(f, n_range, p_range, q_range)) {
            const PairReport r = verify_pair_bound(g);
            rows.push_back(to_json(r));
            md << "| " << g.display() << " | " << r.vcd_bound << " | " << r.max_pair_dim << " | "
               << (r.bound_holds ? "yes" : "NO") << " |\n";
        }
        env.results = rows;
    } else if (fd->parsed()) {
        env.command = "flat-demo";
        env.inputs = {{"mode", mode_str}, {"n", n_range}, {"p", p_range}, {"q", q_range},
                      {"targets", targets_path}};
        if (mode_str == "sl") {
            if (n_range.empty()) throw std::invalid_argument("flat-demo sl needs --n");
            const int n = std::stoi(n_range);
            auto targets = load_targets(targets_path, FixMode::SL_REFLECTION, nullptr);
            for (const auto& t : targets)
                if (t.dim() != std::size_t(n))
                    throw std::invalid_argument("target dimension differs from --n");
            const auto res = build_separating_basis_sl(targets);
            Json out;
            out["flat"] = to_json(res.flat);
            out["lambda"] = to_json(res.lambda);
            out["delta"] = to_json(res.delta);
            Json certs = Json::array();
            for (const auto& c : res.certificates) certs.push_back(to_json(c));
            out["certificates"] = certs;
            env.results = out;
            md << "separating basis found (lambda " << rat_to_string(res.lambda)
               << ", verified perturbation radius " << rat_to_string(res.delta) << ")\n";
            for (std::size_t i = 0; i < res.certificates.size(); ++i)
                md << "  target " << i + 1 << ": " << verdict_name(res.certificates[i].verdict)
                   << "\n";
        } else {
            if (p_range.empty() || q_range.empty())
                throw std::invalid_argument("flat-demo so needs --p and --q");
            const int p = std::stoi(p_range), q = std::stoi(q_range);
            const QuadForm form = QuadForm::standard_pq(p, q);
            auto targets = load_targets(targets_path, FixMode::SO_REFLECTION, &form);
            const auto res = build_separating_decomposition_so(targets, form);
            Json out;
            out["flat"] = to_json(res.flat);
            Json certs = Json::array();
            for (const auto& c : res.certificates) certs.push_back(to_json(c));
            out["certificates"] = certs;
            env.results = out;
            md << "separating plane decomposition found\n";
            for (std::size_t i = 0; i < res.certificates.size(); ++i)
                md << "  target " << i + 1 << ": " << verdict_name(res.certificates[i].verdict)
                   << (res.certificates[i].nonempty == 1 ? " (nonempty)" : "") << "\n";
        }
    }

    env.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    emit(env, format, md.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis failure: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedInstanceError& e) {
        std::cerr << "unsupported instance: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
