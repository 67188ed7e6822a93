/*
   Copyright 2026 The hecke authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hecke/root_system.hpp"

using namespace hecke;

TEST_CASE("type parsing and validation") {
    CHECK(CartanType::parse("A1").rank == 1);
    CHECK(CartanType::parse("g2").family == 'G');
    CHECK_THROWS_AS(CartanType::parse("H3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("E5"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("F5"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("B1"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("A9"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("A0"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("A"), std::invalid_argument);
}

TEST_CASE("positive root counts") {
    CHECK(build_root_system("A1").positive_roots().size() == 1);
    CHECK(build_root_system("A2").positive_roots().size() == 3);
    CHECK(build_root_system("B2").positive_roots().size() == 4);
    CHECK(build_root_system("C2").positive_roots().size() == 4);
    CHECK(build_root_system("G2").positive_roots().size() == 6);
    CHECK(build_root_system("A3").positive_roots().size() == 6);
    CHECK(build_root_system("B3").positive_roots().size() == 9);
    CHECK(build_root_system("C3").positive_roots().size() == 9);
    CHECK(build_root_system("D4").positive_roots().size() == 12);
    CHECK(build_root_system("F4").positive_roots().size() == 24);
    CHECK(build_root_system("E6").positive_roots().size() == 36);
    CHECK(build_root_system("E8").positive_roots().size() == 120);
}

TEST_CASE("Weyl group orders by brute-force generation up to rank 4") {
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
        const RootDatum d = build_root_system(t);
        const auto w = full_weyl_group(d);
        CHECK_MESSAGE(BigInt(w.size()) == weyl_order_formula(d.type()), t);
    }
    CHECK(full_weyl_group(build_root_system("A1")).size() == 2);
    CHECK(full_weyl_group(build_root_system("G2")).size() == 12);
    CHECK(full_weyl_group(build_root_system("B2")).size() == 8);
}

TEST_CASE("pairing duality and Cartan entries") {
    for (const char* t : {"A1", "A2", "B2", "C2", "G2", "F4"}) {
        const RootDatum d = build_root_system(t);
        for (std::size_t i = 0; i < d.rank(); ++i) {
            Weight om(Coord(d.rank(), 0));
            om.fund[i] = 1;
            for (std::size_t j = 0; j < d.rank(); ++j)
                CHECK(pairing_int(d, om, d.simple_coroot(j)) == (i == j ? 1 : 0));
        }
        // <rho, alpha^vee> = 1 for every simple coroot
        for (std::size_t j = 0; j < d.rank(); ++j)
            CHECK(pairing_int(d, rho(d), d.simple_coroot(j)) == 1);
    }
    const RootDatum g2 = build_root_system("G2");
    CHECK(pairing_int(g2, g2.simple_root(0), g2.simple_coroot(1)) == g2.cartan(0, 1));
    CHECK(pairing_int(g2, g2.simple_root(1), g2.simple_coroot(0)) == g2.cartan(1, 0));
    CHECK(g2.cartan(1, 0) == -3);
}

TEST_CASE("rank mismatch rejected") {
    const RootDatum a2 = build_root_system("A2");
    CHECK_THROWS_AS(pairing(a2, Weight(Coord{1}), Coweight(Coord{1, 0})), std::invalid_argument);
}

TEST_CASE("rho and rho_check") {
    const RootDatum a1 = build_root_system("A1");
    CHECK(rho(a1) == Weight(Coord{1}));
    const RootDatum a2 = build_root_system("A2");
    CHECK(rho(a2) == Weight(Coord{1, 1}));
    // 2*rho = 2*alpha_1 + 2*alpha_2 from the positive roots {a1, a2, a1+a2}
    Coord rc;
    REQUIRE(a2.root_lattice_coords(rho(a2).scaled(2), rc));
    CHECK(rc == Coord{2, 2});
    CHECK(rho_check(a2));
    CHECK(rho_check(build_root_system("G2")));
    CHECK(rho_check(build_root_system("F4")));
    CHECK(rho_check(build_root_system("E6")));
}

TEST_CASE("weyl orbits") {
    const RootDatum a1 = build_root_system("A1");
    const auto orb = weyl_orbit(a1, Weight(Coord{1}));
    CHECK(orb.size() == 2);
    CHECK(std::count(orb.begin(), orb.end(), Weight(Coord{-1})) == 1);

    // the short fundamental weight of G2 has a hexagonal orbit
    const RootDatum g2 = build_root_system("G2");
    CHECK(weyl_orbit(g2, Weight(Coord{1, 0})).size() == 6);

    CHECK(weyl_orbit(g2, Weight(Coord{0, 0})).size() == 1);
}

TEST_CASE("dominant representative") {
    const RootDatum a1 = build_root_system("A1");
    const auto r0 = dominant_representative(a1, Weight(Coord{3}));
    CHECK(r0.weight == Weight(Coord{3}));
    CHECK(r0.word.empty());

    const auto r1 = dominant_representative(a1, Weight(Coord{-1}));
    CHECK(r1.weight == Weight(Coord{1}));
    CHECK(r1.word == std::vector<std::size_t>{0});
    CHECK(apply_word(a1, r1.word, r1.weight) == Weight(Coord{-1}));

    // round-trip through s1 s2 applied to omega_1 in A2
    const RootDatum a2 = build_root_system("A2");
    Weight w = apply_simple_reflection(a2, 0, apply_simple_reflection(a2, 1, Weight(Coord{1, 0})));
    const auto r2 = dominant_representative(a2, w);
    CHECK(r2.weight == Weight(Coord{1, 0}));
    CHECK(apply_word(a2, r2.word, r2.weight) == w);
}

TEST_CASE("positive roots are nonnegative integral combinations with consistent heights") {
    for (const char* t : {"A2", "B2", "C3", "G2", "F4"}) {
        const RootDatum d = build_root_system(t);
        std::set<Coord> seen;
        for (const auto& pr : d.positive_roots()) {
            CHECK(seen.insert(pr.root).second);  // unique expression
            long long h = 0;
            for (long long c : pr.root) {
                CHECK(c >= 0);
                h += c;
            }
            CHECK(h >= 1);
            // reflection closure consistency: height-1 layer is exactly the simple roots
            if (h == 1) {
                long long nonzero = std::count_if(pr.root.begin(), pr.root.end(),
                                                  [](long long c) { return c != 0; });
                CHECK(nonzero == 1);
            }
        }
    }
}

TEST_CASE("pairing is invariant under the simultaneous Weyl action") {
    std::mt19937 rng(12345);
    for (const char* t : {"A2", "B2", "G2", "C3"}) {
        const RootDatum d = build_root_system(t);
        const auto group = full_weyl_group(d);
        std::uniform_int_distribution<long long> coin(-3, 3);
        for (int trial = 0; trial < 8; ++trial) {
            Weight w(Coord(d.rank()));
            for (auto& x : w.fund) x = coin(rng);
            // coweights drawn from the coroot lattice to keep pairings integral
            Coweight c(Coord(d.rank(), 0));
            for (std::size_t j = 0; j < d.rank(); ++j) {
                const long long k = coin(rng);
                const auto cr = d.simple_coroot(j);
                for (std::size_t a = 0; a < d.rank(); ++a) c.fund[a] += k * cr.fund[a];
            }
            const BigRat base = pairing(d, w, c);
            for (std::size_t gi = 0; gi < group.size(); gi += std::max<std::size_t>(1, group.size() / 12)) {
                const auto& g = group[gi];
                CHECK(pairing(d, act(g, w), act_on_coweight(d, g, c)) == base);
            }
        }
    }
}

TEST_CASE("coweight reflection matches the general coweight action") {
    for (const char* t : {"B2", "G2"}) {
        const RootDatum d = build_root_system(t);
        for (std::size_t j = 0; j < d.rank(); ++j) {
            WeylElement s{d.simple_reflection(j)};
            Coweight c(Coord(d.rank(), 0));
            c.fund[j] = 2;
            c.fund[(j + 1) % d.rank()] = -1;
            CHECK(act_on_coweight(d, s, c) == apply_simple_reflection(d, j, c));
        }
    }
}

TEST_CASE("weyl length and sign") {
    const RootDatum g2 = build_root_system("G2");
    const auto group = full_weyl_group(g2);
    std::size_t longest = 0;
    for (const auto& g : group) {
        const std::size_t l = weyl_length(g2, g);
        longest = std::max(longest, l);
        CHECK(weyl_sign(g) == (l % 2 == 0 ? 1 : -1));
    }
    CHECK(longest == g2.positive_roots().size());
}
