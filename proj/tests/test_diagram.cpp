#include "skein/diagram.hpp"
#include "skein/surgery.hpp"

#include <doctest.h>

#include <random>

using namespace skein;

namespace {

BraidWord bw(int n, std::vector<int> w) { return BraidWord{n, std::move(w)}; }

std::mt19937 rng(777);

BraidWord random_braid(int max_strands = 5, int max_len = 10) {
    std::uniform_int_distribution<int> sd(2, max_strands);
    int n = sd(rng);
    std::uniform_int_distribution<int> ld(0, max_len), gd(1, n - 1), coin(0, 1);
    BraidWord w{n, {}};
    int len = ld(rng);
    for (int i = 0; i < len; ++i) w.letters.push_back(gd(rng) * (coin(rng) ? 1 : -1));
    return w;
}

// relabel arcs by a random permutation
OrientedDiagram relabel(const OrientedDiagram& d) {
    int n = 0;
    for (const auto& x : d.crossings)
        n = std::max({n, x.over_in, x.over_out, x.under_in, x.under_out});
    for (const auto& c : d.components)
        for (int a : c) n = std::max(n, a);
    std::vector<int> p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    OrientedDiagram r = d;
    for (auto& x : r.crossings) {
        x.over_in = p[x.over_in];
        x.over_out = p[x.over_out];
        x.under_in = p[x.under_in];
        x.under_out = p[x.under_out];
    }
    for (auto& c : r.components)
        for (int& a : c) a = p[a];
    return r;
}

}  // namespace

TEST_CASE("braid word permutation and writhe") {
    BraidWord B = bw(6, {1, 2, 1, 3, 2, 4, 3, 5, 4});
    auto p = B.permutation();
    CHECK(p == std::vector<int>{5, 4, 0, 1, 2, 3});
    CHECK(B.writhe() == 9);
    // single 6-cycle: the closure is a knot
    CHECK(braid_closure(B).component_count() == 1);
}

TEST_CASE("braid closure basics") {
    OrientedDiagram unknot = braid_closure(bw(1, {}));
    validate(unknot);
    CHECK(unknot.crossing_count() == 0);
    CHECK(unknot.component_count() == 1);

    OrientedDiagram tref = braid_closure(bw(2, {1, 1, 1}));
    validate(tref);
    CHECK(tref.crossing_count() == 3);
    CHECK(tref.component_count() == 1);
    CHECK(writhe(tref) == 3);

    CHECK(writhe(braid_closure(bw(2, {1, -1}))) == 0);
    CHECK(braid_closure(bw(2, {1, -1})).component_count() == 2);
}

TEST_CASE("validate catches duplicate arc use") {
    OrientedDiagram d = braid_closure(bw(2, {1, 1, 1}));
    d.crossings[0].over_in = d.crossings[0].under_in;
    CHECK_THROWS_WITH_AS(validate(d), doctest::Contains("duplicate arc"), diagram_error);
}

TEST_CASE("validate accepts braid closures") {
    for (int i = 0; i < 50; ++i) validate(braid_closure(random_braid()));
}

TEST_CASE("reverse_all is an involution and keeps writhe") {
    for (int i = 0; i < 20; ++i) {
        OrientedDiagram d = braid_closure(random_braid());
        OrientedDiagram r = reverse_all(d);
        validate(r);
        CHECK(writhe(r) == writhe(d));
        CHECK(reverse_all(r) == d);
    }
}

TEST_CASE("simplify R2 on sigma sigma-inverse") {
    auto [d, curl] = simplify(braid_closure(bw(2, {1, -1})));
    CHECK(curl == 0);
    CHECK(d.crossing_count() == 0);
    CHECK(d.component_count() == 2);  // identity 2-braid closes to two circles
}

TEST_CASE("simplify R1 records the kink sign") {
    auto [d, curl] = simplify(braid_closure(bw(2, {1})));
    CHECK(curl == 1);
    CHECK(d.crossing_count() == 0);
    CHECK(d.component_count() == 1);

    auto [d2, curl2] = simplify(braid_closure(bw(2, {-1})));
    CHECK(curl2 == -1);
    CHECK(d2.component_count() == 1);
}

TEST_CASE("simplify leaves the trefoil alone") {
    auto [d, curl] = simplify(braid_closure(bw(2, {1, 1, 1})));
    CHECK(curl == 0);
    CHECK(d.crossing_count() == 3);
}

TEST_CASE("canonical code is relabeling invariant") {
    for (int i = 0; i < 30; ++i) {
        OrientedDiagram d = braid_closure(random_braid());
        CHECK(canonical_code(d) == canonical_code(relabel(d)));
    }
}

TEST_CASE("canonical code distinguishes knots") {
    OrientedDiagram tref = braid_closure(bw(2, {1, 1, 1}));
    OrientedDiagram fig8 = braid_closure(bw(3, {1, -2, 1, -2}));
    CHECK(canonical_code(tref) != canonical_code(fig8));
    CHECK(canonical_code(tref) !=
          canonical_code(braid_closure(bw(2, {-1, -1, -1}))));  // mirror differs
}

TEST_CASE("canonical code is stable") {
    OrientedDiagram d = braid_closure(bw(3, {1, 2, -1, 2}));
    CHECK(canonical_code(d) == canonical_code(d));
}

TEST_CASE("switch and smooth are consistent") {
    OrientedDiagram d = braid_closure(bw(2, {1, 1, 1}));
    OrientedDiagram sw = switch_crossing(d, 0);
    validate(sw);
    CHECK(writhe(sw) == 1);
    OrientedDiagram sm = smooth_crossing(d, 0);
    validate(sm);
    CHECK(sm.crossing_count() == 2);
}

TEST_CASE("split pieces finds connected summands") {
    OrientedDiagram tref = braid_closure(bw(2, {1, 1, 1}));
    CHECK(split_pieces(tref).size() == 1);
}
