#include "skein/analysis.hpp"
#include "skein/serialize.hpp"

#include <doctest.h>

using namespace skein;

namespace {

BraidWord bw(int n, std::vector<int> w) { return BraidWord{n, std::move(w)}; }

LaurentS ls(std::initializer_list<std::pair<int, long>> terms) {
    std::vector<LaurentS::Term> t;
    for (auto [e, c] : terms) t.emplace_back(e, Int(c));
    return LaurentS::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("p0 of the trefoil") {
    LaurentVZ p = homfly_ambient_brute(braid_closure(bw(2, {1, 1, 1})));
    CHECK(p0(p) == ls({{2, 2}, {4, -1}}));
    CHECK(p0(LaurentVZ()).is_zero());
}

TEST_CASE("kauffman_distinct is one-sided") {
    LaurentVZ p = homfly_ambient_brute(braid_closure(bw(2, {1, 1, 1})));
    CHECK(kauffman_distinct(p, p) == KauffmanVerdict::inconclusive);
    LaurentVZ q = p.v_inverted();
    CHECK(kauffman_distinct(p, q) == KauffmanVerdict::distinct);
}

TEST_CASE("vassiliev gap of equal knots is empty") {
    LaurentVZ p = homfly_ambient_brute(braid_closure(bw(2, {1, 1, 1})));
    CHECK_FALSE(vassiliev_gap(p, p, 12).has_value());
}

TEST_CASE("vassiliev gap sees a mirror pair at degree 2") {
    LaurentVZ p = homfly_ambient_brute(braid_closure(bw(2, {1, 1, 1})));
    auto gap = vassiliev_gap(p, p.v_inverted(), 8);
    REQUIRE(gap.has_value());
    CHECK(gap->degree >= 1);
}

TEST_CASE("sl3 difference of equal inputs vanishes") {
    LaurentVZ p = homfly_ambient_brute(braid_closure(bw(3, {1, -2, 1, -2})));
    CHECK(sl3_difference(p, p).is_zero());
}

TEST_CASE("compare on identical knots") {
    OrientedDiagram d = braid_closure(bw(2, {1, 1, 1}));
    EngineConfig cfg;
    cfg.engine = EngineKind::brute;
    ComparisonReport r = compare(d, d, cfg, "k", "k");
    CHECK(r.computed_a);
    CHECK(r.homfly_equal);
    CHECK(r.jones_equal);
    CHECK(r.p0_equal);
    CHECK(r.sl3_equal);
    CHECK_FALSE(r.gap.has_value());
    CHECK(r.kauffman == KauffmanVerdict::inconclusive);
    Json j = to_json(r);
    CHECK(j.at("homfly_equal").get<bool>());
    CHECK(j.at("vassiliev_gap").get<std::string>() == "none up to truncation");
}

TEST_CASE("compare reports budget overruns as partial") {
    OrientedDiagram d = braid_closure(bw(5, {1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4}));
    EngineConfig cfg;
    cfg.engine = EngineKind::memo;
    cfg.options.max_nodes = 1;
    cfg.options.min_cache_crossings = 0;
    ComparisonReport r = compare(d, d, cfg);
    bool complete = r.computed_a && r.computed_b;
    CHECK_FALSE(complete);
    CHECK_FALSE(r.note.empty());
    Json j = to_json(r);
    CHECK_FALSE(j.at("computed").get<bool>());
}

TEST_CASE("polynomial json round trips are exact") {
    LaurentVZ p = homfly_ambient_brute(braid_closure(bw(3, {1, -2, 1, -2})));
    CHECK(laurent_vz_from_json(to_json(p)) == p);
    LaurentS s = p.substitute_v_power(2);
    CHECK(laurent_s_from_json(to_json(s)) == s);
    NSeries h = h_expansion(p, 9);
    CHECK(nseries_from_json(to_json(h)) == h);
    LMTable t = to_lm_table(p);
    CHECK(lmtable_from_json(to_json(t)) == t);
    // large coefficients survive the decimal-string round trip
    LaurentVZ big = LaurentVZ::monomial(Int("123456789012345678901234567890123456789"), -7, 4);
    CHECK(laurent_vz_from_json(to_json(big)) == big);
}

TEST_CASE("diagram and braid json round trips") {
    OrientedDiagram d = braid_closure(bw(3, {1, 2, -1}));
    CHECK(diagram_from_json(to_json(d)) == d);
    BraidWord w = bw(6, {1, 2, 1, 3, 2, 4, 3, 5, 4});
    Json j = to_json(w);
    BraidWord back = braid_from_json(j);
    CHECK(back.strands == w.strands);
    CHECK(back.letters == w.letters);
}

TEST_CASE("tangle and scheme json round trips") {
    Tangle t = braid_tangle(bw(2, {1, 1}));
    Tangle back = tangle_from_json(to_json(t));
    CHECK(back == t);
    MutationScheme s;
    s.F = identity_tangle(2);
    s.T = braid_tangle(bw(2, {1}));
    s.m1 = s.m2 = 1;
    s.orient1 = {1};
    s.orient2 = {1};
    MutationScheme s2 = scheme_from_json(to_json(s));
    CHECK(s2.F == s.F);
    CHECK(s2.T == s.T);
    CHECK(s2.m1 == 1);
    CHECK_FALSE(s2.transposing);
}

TEST_CASE("lm table renders the printed layout") {
    LaurentVZ p = homfly_ambient_brute(braid_closure(bw(2, {1, 1, 1})));
    std::string txt = to_lm_table(p).render("K");
    CHECK(txt.find("m^2") != std::string::npos);
    CHECK(txt.find("l^4") != std::string::npos);
}
