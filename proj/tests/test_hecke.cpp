#include "skein/engines.hpp"
#include "skein/hecke.hpp"

#include <doctest.h>

#include <random>

using namespace skein;

namespace {

BraidWord bw(int n, std::vector<int> w) { return BraidWord{n, std::move(w)}; }

std::mt19937 rng(31337);

BraidWord random_braid(int max_strands = 5, int max_len = 10) {
    std::uniform_int_distribution<int> sd(2, max_strands);
    int n = sd(rng);
    std::uniform_int_distribution<int> ld(0, max_len), gd(1, n - 1), coin(0, 1);
    BraidWord w{n, {}};
    int len = ld(rng);
    for (int i = 0; i < len; ++i) w.letters.push_back(gd(rng) * (coin(rng) ? 1 : -1));
    return w;
}

PermCode pc(std::vector<int> p) { return perm_pack(p); }

}  // namespace

TEST_CASE("empty word is the identity basis element") {
    HeckeElement e = braid_to_hecke(bw(3, {}));
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms.begin()->first == perm_identity(3));
    CHECK(e.terms.begin()->second == LaurentVZ::one());
}

TEST_CASE("quadratic relation on sigma_1 squared") {
    HeckeElement e = braid_to_hecke(bw(2, {1, 1}));
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms.at(pc({0, 1})) == LaurentVZ::one());
    CHECK(e.terms.at(pc({1, 0})) == LaurentVZ::monomial(1, 0, 1));  // z T_{s1}
}

TEST_CASE("inverse generator relation") {
    HeckeElement e = braid_to_hecke(bw(2, {-1}));
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms.at(pc({1, 0})) == LaurentVZ::one());
    CHECK(e.terms.at(pc({0, 1})) == -LaurentVZ::monomial(1, 0, 1));
}

TEST_CASE("hecke quadratic identity on random words") {
    for (int i = 0; i < 20; ++i) {
        BraidWord w = random_braid(4, 6);
        std::uniform_int_distribution<int> gd(1, w.strands - 1);
        int g = gd(rng);
        BraidWord w_gg = w, w_g = w;
        w_g.letters.insert(w_g.letters.begin(), g);
        w_gg.letters.insert(w_gg.letters.begin(), g);
        w_gg.letters.insert(w_gg.letters.begin(), g);
        HeckeElement lhs = braid_to_hecke(w_gg);
        HeckeElement zs = braid_to_hecke(w_g);
        HeckeElement plain = braid_to_hecke(w);
        // sigma^2 w = z sigma w + w
        HeckeElement rhs{w.strands, {}};
        for (auto& [p, c] : zs.terms) rhs.terms[p] += c.shifted(0, 1);
        for (auto& [p, c] : plain.terms) rhs.terms[p] += c;
        for (auto it = rhs.terms.begin(); it != rhs.terms.end();)
            it = it->second.is_zero() ? rhs.terms.erase(it) : std::next(it);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("closed one-strand identity is the unknot") {
    CHECK(trace_closure(braid_to_hecke(bw(1, {}))) == LaurentVZ::one());
}

TEST_CASE("closed two-strand identity is delta") {
    CHECK(trace_closure(braid_to_hecke(bw(2, {}))) == LaurentVZ::delta());
}

TEST_CASE("hecke engine equals brute force on random braids") {
    for (int i = 0; i < 60; ++i) {
        BraidWord w = random_braid(5, 10);
        CHECK(homfly_hecke(w) == homfly_brute(braid_closure(w)));
    }
}

TEST_CASE("hecke engine handles nine strands") {
    BraidWord w = bw(9, {1, 2, 3, 4, 5, 6, 7, 8, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(homfly_hecke(w) == homfly_brute(braid_closure(w)));
}

TEST_CASE("sparse fallback beyond the dense strand limit") {
    BraidWord w = bw(11, {1, 3, -5, 7, 9, 10, -2});
    CHECK(homfly_hecke(w) == homfly_brute(braid_closure(w)));
}

TEST_CASE("markov moves leave the hecke value alone") {
    for (int i = 0; i < 15; ++i) {
        BraidWord w = random_braid(4, 8);
        // conjugation
        std::uniform_int_distribution<int> gd(1, w.strands - 1);
        int g = gd(rng);
        BraidWord conj = w;
        conj.letters.insert(conj.letters.begin(), g);
        conj.letters.push_back(-g);
        CHECK(homfly_hecke(w) == homfly_hecke(conj));
        // positive stabilization multiplies the framed value by v^-1
        BraidWord stab = w;
        stab.strands++;
        stab.letters.push_back(w.strands);
        CHECK(homfly_hecke(stab) == homfly_hecke(w).shifted(-1, 0));
    }
}
