#include "skein/engines.hpp"
#include "skein/tangle.hpp"

#include <doctest.h>

#include <random>

using namespace skein;

namespace {

BraidWord bw(int n, std::vector<int> w) { return BraidWord{n, std::move(w)}; }

std::mt19937 rng(99);

// random 2-tangle built from a 3-braid with the third strand closed off
Tangle random_two_tangle(int max_len = 7, bool want_pure = true) {
    for (;;) {
        std::uniform_int_distribution<int> ld(1, max_len), gd(1, 2), coin(0, 1);
        BraidWord w{3, {}};
        int len = ld(rng);
        for (int i = 0; i < len; ++i) w.letters.push_back(gd(rng) * (coin(rng) ? 1 : -1));
        auto perm = w.permutation();
        // closing strand 2 around pairs bottoms {0,1} with tops {0,1}
        if (perm[2] == 2) continue;  // closing would make a split circle
        int t0 = perm[0] == 2 ? perm[2] : perm[0];
        bool pure = t0 == 0;
        if (want_pure ? !pure : pure) continue;
        Tangle t = braid_tangle(w);
        // close strand 2: join top[2] to bottom[2] with a fresh pair of arcs
        Tangle closed;
        closed.crossings = t.crossings;
        closed.free_circles = t.free_circles;
        closed.bottom = {t.bottom[0], t.bottom[1]};
        closed.top = {t.top[0], t.top[1]};
        // wire top[2] -> bottom[2]
        int leaving = t.top[2].arc, entering = t.bottom[2].arc;
        for (auto& x : closed.crossings)
            for (int* slot : {&x.over_in, &x.over_out, &x.under_in, &x.under_out})
                if (*slot == entering) *slot = leaving;
        validate_tangle(closed);
        return closed;
    }
}

}  // namespace

TEST_CASE("identity tangle and purity") {
    Tangle id2 = identity_tangle(2);
    validate_tangle(id2);
    CHECK(is_pure(id2));
    CHECK_FALSE(is_transposing(id2));
}

TEST_CASE("braid tangle connectivity") {
    Tangle s1 = braid_tangle(bw(2, {1}));
    CHECK(is_transposing(s1));
    Tangle s11 = braid_tangle(bw(2, {1, 1}));
    CHECK(is_pure(s11));
}

TEST_CASE("rotations are involutions up to canonical code") {
    for (int i = 0; i < 20; ++i) {
        Tangle t = random_two_tangle(6, i % 2 == 0);
        for (Axis ax : {Axis::tau1, Axis::tau2}) {
            Tangle twice = rotate_tangle(rotate_tangle(t, ax), ax);
            CHECK(canonical_code(trace_close(twice)) == canonical_code(trace_close(t)));
        }
    }
}

TEST_CASE("tau3 is the composite of tau1 and tau2") {
    for (int i = 0; i < 20; ++i) {
        Tangle t = random_two_tangle(6, i % 2 == 0);
        Tangle lhs = rotate_tangle(t, Axis::tau3);
        Tangle rhs = rotate_tangle(rotate_tangle(t, Axis::tau2), Axis::tau1);
        CHECK(canonical_code(trace_close(lhs)) == canonical_code(trace_close(rhs)));
    }
}

TEST_CASE("tau2 of a braid tangle mirrors and reverses the word") {
    // 6-strand braid s2 s3; its half-turn is s3 s4
    Tangle t = braid_tangle(bw(6, {2, 3}));
    // the half-turn runs downward; reversing the strings gives the braid read
    // upward again
    Tangle r = reverse_strings(rotate_tangle(t, Axis::tau2));
    Tangle expect = braid_tangle(bw(6, {3, 4}));
    CHECK(canonical_code(trace_close(r)) == canonical_code(trace_close(expect)));
}

TEST_CASE("writhe is preserved by rotations and reversal") {
    for (int i = 0; i < 10; ++i) {
        Tangle t = random_two_tangle();
        int w = 0;
        for (const auto& x : t.crossings) w += x.sign;
        for (Axis ax : {Axis::tau1, Axis::tau2, Axis::tau3}) {
            Tangle r = rotate_tangle(t, ax);
            int wr = 0;
            for (const auto& x : r.crossings) wr += x.sign;
            CHECK(wr == w);
        }
        Tangle rev = reverse_strings(t);
        int wv = 0;
        for (const auto& x : rev.crossings) wv += x.sign;
        CHECK(wv == w);
    }
}

TEST_CASE("stacking with the identity changes nothing") {
    for (int i = 0; i < 10; ++i) {
        Tangle t = random_two_tangle();
        Tangle id2 = identity_tangle(2);
        CHECK(canonical_code(trace_close(stack(id2, t))) ==
              canonical_code(trace_close(t)));
        CHECK(canonical_code(trace_close(stack(t, id2))) ==
              canonical_code(trace_close(t)));
    }
}

TEST_CASE("side by side adds arity") {
    Tangle t = side_by_side(identity_tangle(2), identity_tangle(2));
    CHECK(t.width_bottom() == 4);
    CHECK(t.width_top() == 4);
}

TEST_CASE("plat closure of the identity 2-tangle is the unknot") {
    OrientedDiagram d = close_tangle(identity_like({true, false}));
    validate(d);
    CHECK(d.component_count() == 1);
    CHECK(d.crossing_count() == 0);
}

TEST_CASE("trace closure of a braid tangle matches braid closure") {
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<int> sd(2, 4);
        int n = sd(rng);
        std::uniform_int_distribution<int> ld(0, 7), gd(1, n - 1), coin(0, 1);
        BraidWord w{n, {}};
        int len = ld(rng);
        for (int k = 0; k < len; ++k) w.letters.push_back(gd(rng) * (coin(rng) ? 1 : -1));
        CHECK(canonical_code(trace_close(braid_tangle(w))) ==
              canonical_code(braid_closure(w)));
    }
}

TEST_CASE("one-cable is the identity") {
    for (int i = 0; i < 10; ++i) {
        Tangle t = random_two_tangle();
        CableSpec spec;
        spec.strand_orients = {{1}, {1}};
        Tangle c = cable_tangle(t, spec);
        CHECK(canonical_code(trace_close(c)) == canonical_code(trace_close(t)));
    }
}

TEST_CASE("cable crossing counts multiply") {
    for (int i = 0; i < 10; ++i) {
        Tangle t = random_two_tangle();
        auto paths = strand_paths(t);
        REQUIRE(paths.size() == 2);
        // how many crossings join strand a to strand b
        std::map<int, int> arc_strand;
        for (int s = 0; s < 2; ++s)
            for (int a : paths[s].arcs) arc_strand[a] = s;
        int n00 = 0, n11 = 0, n01 = 0;
        for (const auto& x : t.crossings) {
            int so = arc_strand.at(x.over_in), su = arc_strand.at(x.under_in);
            if (so == 0 && su == 0) ++n00;
            else if (so == 1 && su == 1) ++n11;
            else ++n01;
        }
        CableSpec spec;  // widths assigned in path order
        spec.strand_orients = {{1, 1, 1}, {1, -1}};
        Tangle c = cable_tangle(t, spec);
        CHECK(static_cast<int>(c.crossings.size()) == n00 * 9 + n11 * 4 + n01 * 6);
    }
}

TEST_CASE("cabled tangles stay planar and consistent") {
    for (int i = 0; i < 10; ++i) {
        Tangle t = random_two_tangle(5);
        CableSpec spec;
        spec.strand_orients = {{1, -1}, {1, 1}};
        Tangle c = cable_tangle(t, spec);
        validate_tangle(c);
        CHECK(c.width_bottom() == 4);
    }
}

TEST_CASE("cable of a closed diagram") {
    OrientedDiagram tref = braid_closure(bw(2, {1, 1, 1}));
    OrientedDiagram c2 = cable_diagram(tref, {1, 1});
    validate(c2);
    CHECK(c2.crossing_count() == 12);  // 3 * 2^2
    CHECK(c2.component_count() == 2);
    OrientedDiagram c3 = cable_diagram(tref, {1, 1, 1});
    validate(c3);
    CHECK(c3.crossing_count() == 27);
}

TEST_CASE("cut open and reclose is the identity") {
    for (int i = 0; i < 10; ++i) {
        OrientedDiagram d = braid_closure(bw(2, {1, 1, 1}));
        Tangle t = cut_open(d, i % 3);
        validate_tangle(t);
        CHECK(canonical_code(trace_close(t)) == canonical_code(d));
    }
}
