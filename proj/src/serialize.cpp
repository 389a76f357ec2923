#include "latdim/serialize.hpp"

namespace latdim {

Json to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("expected a rational (string or integer)");
}

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    Vec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json to_json(const GroupSpec& g) {
    Json j;
    j["family"] = family_token(g.family);
    if (family_uses_pq(g.family)) {
        j["p"] = g.p;
        j["q"] = g.q;
    } else {
        j["n"] = g.n;
    }
    j["name"] = g.display();
    return j;
}

GroupSpec group_from_json(const Json& j) {
    const Family f = family_from_token(j.at("family").get<std::string>());
    if (family_uses_pq(f)) return GroupSpec::make_pq(f, j.at("p").get<int>(), j.at("q").get<int>());
    return GroupSpec::make_n(f, j.at("n").get<int>());
}

Json to_json(const EigenPattern& p) {
    Json j;
    j["family"] = family_token(p.family);
    switch (p.family) {
        case Family::SL_C:
            j["classes"] = p.classes;
            break;
        case Family::SU_pq:
            j["splits"] = p.splits;
            break;
        case Family::Sp_pq:
        case Family::SO_pq:
            j["splits"] = p.splits;
            j["split_s"] = p.split_s;
            j["split_t"] = p.split_t;
            break;
        default:
            j["classes"] = p.classes;
            j["s"] = p.s;
            j["t"] = p.t;
            break;
    }
    return j;
}

EigenPattern pattern_from_json(const Json& j) {
    EigenPattern p;
    p.family = family_from_token(j.at("family").get<std::string>());
    if (j.contains("classes")) p.classes = j["classes"].get<std::vector<long>>();
    if (j.contains("s")) p.s = j["s"].get<long>();
    if (j.contains("t")) p.t = j["t"].get<long>();
    if (j.contains("splits")) p.splits = j["splits"].get<std::vector<std::pair<long, long>>>();
    if (j.contains("split_s")) p.split_s = j["split_s"].get<std::pair<long, long>>();
    if (j.contains("split_t")) p.split_t = j["split_t"].get<std::pair<long, long>>();
    p.canonicalize();
    return p;
}

Json to_json(const CentralizerShape& s) {
    Json j;
    j["display"] = s.display();
    j["det_constrained"] = s.det_constrained;
    Json factors = Json::array();
    for (const auto& f : s.factors) {
        Json jf;
        jf["a"] = f.a;
        jf["b"] = f.b;
        jf["kind"] = static_cast<int>(f.kind);
        factors.push_back(jf);
    }
    j["factors"] = factors;
    return j;
}

Json to_json(const GapReport& r) {
    Json j;
    j["group"] = to_json(r.group);
    j["vcd_bound"] = r.vcd_bound;
    j["max_fixed_dim"] = r.max_fixed_dim;
    j["gap"] = r.gap;
    j["verdict"] = verdict_name(r.verdict);
    if (r.closed_form_max) j["closed_form_max"] = *r.closed_form_max;
    j["closed_form_agrees"] = r.closed_form_agrees;
    j["patterns_scanned"] = r.patterns_scanned;
    Json maxers = Json::array();
    for (const auto& m : r.maximizers) maxers.push_back(to_json(m));
    j["maximizers"] = maxers;
    return j;
}

Json to_json(const PairReport& r) {
    Json j;
    j["group"] = to_json(r.group);
    j["vcd_bound"] = r.vcd_bound;
    j["max_pair_dim"] = r.max_pair_dim;
    j["bound_holds"] = r.bound_holds;
    if (r.group.family == Family::SO_pq) {
        j["argmax"] = Json{{"p_prime", r.argmax.p_prime}, {"q_prime", r.argmax.q_prime}};
    }
    return j;
}

Json to_json(const FixedSetSpec& f) {
    Json j;
    j["mode"] = f.mode == FixMode::SL_REFLECTION ? "sl" : "so";
    Json V = Json::array();
    for (const auto& w : f.V) V.push_back(to_json(w));
    j["V"] = V;
    j["u"] = to_json(f.u);
    return j;
}

FixedSetSpec fixed_set_from_json(const Json& j, FixMode mode) {
    FixedSetSpec f;
    f.mode = mode;
    if (j.contains("mode")) {
        const std::string m = j["mode"].get<std::string>();
        f.mode = m == "so" ? FixMode::SO_REFLECTION : FixMode::SL_REFLECTION;
    }
    for (const auto& w : j.at("V")) f.V.push_back(vec_from_json(w));
    f.u = vec_from_json(j.at("u"));
    return f;
}

Json to_json(const FlatSpec& f) {
    Json j;
    if (f.mode == FixMode::SL_REFLECTION) {
        j["mode"] = "sl";
        Json basis = Json::array();
        for (const auto& v : f.basis) basis.push_back(to_json(v));
        j["basis"] = basis;
        return j;
    }
    j["mode"] = "so";
    Json planes = Json::array();
    for (const auto& pl : f.planes) planes.push_back(Json::array({to_json(pl[0]), to_json(pl[1])}));
    j["planes"] = planes;
    Json rest = Json::array();
    for (const auto& v : f.rest) rest.push_back(to_json(v));
    j["rest"] = rest;
    return j;
}

Json to_json(const IntersectionCertificate& c) {
    Json j;
    j["verdict"] = verdict_name(c.verdict);
    j["nonempty"] = c.nonempty == 0 ? Json() : Json(c.nonempty > 0);
    if (c.obstruction != ObstructionTag::NONE) j["obstruction"] = obstruction_name(c.obstruction);
    if (!c.witness_diag.empty()) j["witness_diag"] = to_json(Vec(c.witness_diag));
    if (!c.witness_vectors.empty()) {
        Json w = Json::array();
        for (const auto& v : c.witness_vectors) w.push_back(to_json(v));
        j["witness_vectors"] = w;
    }
    if (!c.margins.empty()) j["margins"] = to_json(Vec(c.margins));
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

} // namespace latdim
