#include "skein/serialize.hpp"

namespace skein {

namespace {

std::string rat_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace

Json to_json(const LaurentVZ& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) terms.push_back({t.first.a, t.first.b, t.second.str()});
    return Json{{"terms", terms}};
}

LaurentVZ laurent_vz_from_json(const Json& j) {
    std::vector<LaurentVZ::Term> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back({LaurentVZ::Exp{t.at(0).get<std::int32_t>(), t.at(1).get<std::int32_t>()},
                         Int(t.at(2).get<std::string>())});
    return LaurentVZ::from_terms(std::move(terms));
}

Json to_json(const LaurentS& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) terms.push_back({t.first, t.second.str()});
    return Json{{"terms", terms}};
}

LaurentS laurent_s_from_json(const Json& j) {
    std::vector<LaurentS::Term> terms;
    for (const auto& t : j.at("terms"))
        terms.emplace_back(t.at(0).get<std::int32_t>(), Int(t.at(1).get<std::string>()));
    return LaurentS::from_terms(std::move(terms));
}

Json to_json(const NPoly& p) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(rat_string(x));
    return Json{{"coeffs", c}};
}

NPoly npoly_from_json(const Json& j) {
    std::vector<Rat> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rat_parse(x.get<std::string>()));
    return NPoly::from_coeffs(std::move(c));
}

Json to_json(const NSeries& s) {
    Json c = Json::array();
    for (int d = 0; d <= s.order(); ++d) c.push_back(to_json(s.coeff(d)));
    return Json{{"order", s.order()}, {"coeffs", c}};
}

NSeries nseries_from_json(const Json& j) {
    NSeries s(j.at("order").get<int>());
    const auto& c = j.at("coeffs");
    for (int d = 0; d <= s.order(); ++d) s.coeff(d) = npoly_from_json(c.at(d));
    return s;
}

Json to_json(const LMTable& t) {
    Json entries = Json::array();
    for (const auto& [key, c] : t.entries()) entries.push_back({key.first, key.second, c.str()});
    return Json{{"entries", entries}};
}

LMTable lmtable_from_json(const Json& j) {
    LMTable t;
    for (const auto& e : j.at("entries"))
        t.set(e.at(0).get<std::int32_t>(), e.at(1).get<std::int32_t>(),
              Int(e.at(2).get<std::string>()));
    return t;
}

Json to_json(const OrientedDiagram& d) {
    Json cr = Json::array();
    for (const auto& x : d.crossings)
        cr.push_back({x.over_in, x.over_out, x.under_in, x.under_out, x.sign});
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back(c);
    return Json{{"crossings", cr}, {"components", comps}};
}

OrientedDiagram diagram_from_json(const Json& j) {
    OrientedDiagram d;
    for (const auto& x : j.at("crossings"))
        d.crossings.push_back({x.at(0).get<int>(), x.at(1).get<int>(), x.at(2).get<int>(),
                               x.at(3).get<int>(), x.at(4).get<int>()});
    for (const auto& c : j.at("components")) d.components.push_back(c.get<std::vector<int>>());
    return d;
}

Json to_json(const BraidWord& w) { return Json{{"strands", w.strands}, {"word", w.letters}}; }

BraidWord braid_from_json(const Json& j) {
    BraidWord w;
    w.strands = j.at("strands").get<int>();
    w.letters = j.at("word").get<std::vector<int>>();
    w.check();
    return w;
}

namespace {

Json endpoints_json(const std::vector<Endpoint>& eps) {
    Json a = Json::array();
    for (const auto& e : eps) a.push_back({e.arc, e.into ? "in" : "out"});
    return a;
}

std::vector<Endpoint> endpoints_parse(const Json& j) {
    std::vector<Endpoint> eps;
    for (const auto& e : j) {
        std::string dir = e.at(1).get<std::string>();
        if (dir != "in" && dir != "out") throw diagram_error("endpoint direction must be in/out");
        eps.push_back({e.at(0).get<int>(), dir == "in"});
    }
    return eps;
}

}  // namespace

Json to_json(const Tangle& t) {
    Json cr = Json::array();
    for (const auto& x : t.crossings)
        cr.push_back({x.over_in, x.over_out, x.under_in, x.under_out, x.sign});
    return Json{{"crossings", cr},
                {"bottom", endpoints_json(t.bottom)},
                {"top", endpoints_json(t.top)},
                {"circles", t.free_circles}};
}

Tangle tangle_from_json(const Json& j) {
    Tangle t;
    for (const auto& x : j.at("crossings"))
        t.crossings.push_back({x.at(0).get<int>(), x.at(1).get<int>(), x.at(2).get<int>(),
                               x.at(3).get<int>(), x.at(4).get<int>()});
    t.bottom = endpoints_parse(j.at("bottom"));
    t.top = endpoints_parse(j.at("top"));
    t.free_circles = j.value("circles", 0);
    return t;
}

Json to_json(const MutationScheme& s) {
    return Json{{"F", to_json(s.F)},
                {"kind", s.transposing ? "transposing" : "pure"},
                {"T", to_json(s.T)},
                {"m1", s.m1},
                {"m2", s.m2},
                {"orient1", s.orient1},
                {"orient2", s.orient2}};
}

MutationScheme scheme_from_json(const Json& j) {
    MutationScheme s;
    s.F = tangle_from_json(j.at("F"));
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "pure" && kind != "transposing")
        throw diagram_error("scheme kind must be pure or transposing");
    s.transposing = kind == "transposing";
    s.T = tangle_from_json(j.at("T"));
    s.m1 = j.at("m1").get<int>();
    s.m2 = j.at("m2").get<int>();
    s.orient1 = j.at("orient1").get<std::vector<int>>();
    s.orient2 = j.at("orient2").get<std::vector<int>>();
    return s;
}

namespace {
const char* verdict_str(KauffmanVerdict v) {
    switch (v) {
        case KauffmanVerdict::distinct: return "distinct";
        case KauffmanVerdict::inconclusive: return "inconclusive";
        default: return "not-computed";
    }
}
}  // namespace

Json to_json(const ComparisonReport& r) {
    Json j{{"pair", {r.name_a, r.name_b}},
           {"computed", r.computed_a && r.computed_b},
           {"truncation", r.truncation}};
    if (!r.note.empty()) j["note"] = r.note;
    if (!(r.computed_a && r.computed_b)) return j;
    j["homfly_equal"] = r.homfly_equal;
    j["homfly"] = {{r.name_a, to_json(r.homfly_a)}, {r.name_b, to_json(r.homfly_b)}};
    j["p0_equal"] = r.p0_equal;
    j["p0"] = {{r.name_a, to_json(r.p0_a)}, {r.name_b, to_json(r.p0_b)}};
    j["jones_equal"] = r.jones_equal;
    j["sl3_equal"] = r.sl3_equal;
    if (!r.sl3_equal) j["sl3_difference"] = to_json(r.sl3_diff);
    j["sl3_seventh_cyclotomic_factor"] = r.sl3_factor_observed;
    if (r.gap)
        j["vassiliev_gap"] = {{"degree", r.gap->degree}, {"coeff", to_json(r.gap->coeff)}};
    else
        j["vassiliev_gap"] = "none up to truncation";
    j["lm_tables"] = {{r.name_a, to_json(r.lm_a)}, {r.name_b, to_json(r.lm_b)}};
    j["kauffman_distinct"] = verdict_str(r.kauffman);
    return j;
}

}  // namespace skein
