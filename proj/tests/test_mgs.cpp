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

#include "hecke/mgs.hpp"

using namespace hecke;

TEST_CASE("torus semistability by the hull criterion") {
    TorusActionWeights w;
    w.weights = {Coord{2}, Coord{-2}};
    w.support = {0, 1};
    CHECK(git_semistable_torus(w));

    w.support = {0};
    CHECK_FALSE(git_semistable_torus(w));
    w.support = {1};
    CHECK_FALSE(git_semistable_torus(w));
    w.support = {};
    CHECK_FALSE(git_semistable_torus(w));

    TorusActionWeights z;
    z.weights = {Coord{0}, Coord{5}};
    z.support = {0};
    CHECK(git_semistable_torus(z));  // the zero weight is always in the hull
}

TEST_CASE("finite fields behave") {
    const GaloisField& f9 = GaloisField::get(3, 2);
    CHECK(f9.size() == 9);
    // Frobenius fixes exactly the prime field
    int fixed = 0;
    for (long long a = 0; a < 9; ++a)
        if (f9.frobenius(static_cast<GaloisField::Elt>(a)) == a) ++fixed;
    CHECK(fixed == 3);
    // trace is onto the prime field
    std::set<long long> traces;
    for (long long a = 0; a < 9; ++a) traces.insert(f9.trace_to_prime(static_cast<GaloisField::Elt>(a)));
    CHECK(traces == std::set<long long>{0, 1, 2});
    // field axioms on a sample
    for (long long a = 1; a < 9; ++a) {
        const auto x = static_cast<GaloisField::Elt>(a);
        CHECK(f9.mul(x, f9.inv(x)) == f9.one());
    }
}

TEST_CASE("truncated model counts") {
    TruncatedLoopGroupModel sl2(2, 3, 1, 2);
    CHECK(sl2.cardinality() == 648);  // |SL2(F3)| * 3^3
    const auto all = sl2.enumerate();
    CHECK(all.size() == 648);
    for (std::size_t i = 0; i < all.size(); i += 37) {
        CHECK(sl2.is_sl(all[i]));
        CHECK(sl2.mul(all[i], sl2.inverse(all[i])) == sl2.identity());
    }

    // |N<F_q[t]/t^2>| = q^2 for SL2
    const auto rads = standard_parabolics(sl2);
    REQUIRE(rads.size() == 1);
    CHECK(rads[0].points.size() == 9);

    TruncatedLoopGroupModel sl3(3, 2, 1, 1);
    const auto rads3 = standard_parabolics(sl3);
    CHECK(rads3.size() == 3);

    // the extension model at n=2 matches the cardinality formula
    TruncatedLoopGroupModel sl2e(2, 3, 2, 2);
    CHECK(sl2e.cardinality() == BigInt(720) * 729);
}

TEST_CASE("epipelagic datum bookkeeping") {
    const auto d = epipelagic_sl2_datum(3, true, true);
    // |H(F_3)| = 81
    TruncatedLoopGroupModel base(2, 3, 1, 2);
    CHECK(d.h_enumerate(base).size() == 81);
    for (const auto& h : d.h_enumerate(base)) {
        CHECK(d.h_member(base, h));
        CHECK(base.is_sl(h));
    }
    // torus exponents on the two coordinates
    REQUIRE(d.torus.has_value());
    CHECK(d.torus->weights == std::vector<Coord>{Coord{2}, Coord{-2}});
    CHECK(git_semistable_torus(*d.torus));
    CHECK_THROWS_AS(epipelagic_sl2_datum(4, true, true), std::invalid_argument);
}

TEST_CASE("extended characters are homomorphisms, exhaustively at small size") {
    const auto d = epipelagic_sl2_datum(3, true, true);
    for (int n : {1, 2}) {
        const ExtendedCharacter chi(d, n);
        const auto& model = chi.model();
        const auto pts = d.h_enumerate(model);
        const long long p = model.p();
        // exhaustive at n=1 (81 points); strided-but-dense at n=2
        const std::size_t stride = n == 1 ? 1 : 27;
        for (std::size_t i = 0; i < pts.size(); i += stride)
            for (std::size_t j = 0; j < pts.size(); j += stride) {
                const auto prod = model.mul(pts[i], pts[j]);
                CHECK((chi(pts[i]) + chi(pts[j])) % p == chi(prod));
            }
        // elements with vanishing form take value one at every level
        for (std::size_t i = 0; i < pts.size(); i += 7)
            if (d.linear_form(model, pts[i]) == 0) CHECK(chi(pts[i]) == 0);
    }
}

TEST_CASE("epipelagic verdicts match semistability on all four supports") {
    struct Case {
        bool tr, bl;
    };
    for (const Case c : {Case{true, true}, Case{true, false}, Case{false, true}, Case{false, false}}) {
        const auto d = epipelagic_sl2_datum(3, c.tr, c.bl);
        const bool stable = git_semistable_torus(*d.torus);
        const auto v = check_geometric_supercuspidality(d, 1);
        REQUIRE(v.levels.size() == 1);
        CHECK(v.complete);
        CHECK_MESSAGE(v.levels[0].pass == stable, "support tr=" << c.tr << " bl=" << c.bl);
        if (!v.levels[0].pass) {
            REQUIRE(v.levels[0].witness.has_value());
            CHECK(v.levels[0].witness->radical == "borel");
        }
    }
}

TEST_CASE("epipelagic semistable datum passes both levels") {
    const auto d = epipelagic_sl2_datum(3, true, true);
    const auto v = check_geometric_supercuspidality(d, 2);
    REQUIRE(v.levels.size() == 2);
    CHECK(v.levels[0].pass);
    CHECK(v.levels[1].pass);
    CHECK(v.overall_pass);
    CHECK(v.complete);
}

TEST_CASE("single-coordinate support fails at the base level already") {
    const auto d = epipelagic_sl2_datum(3, true, false);
    const auto v = check_geometric_supercuspidality(d, 1);
    CHECK_FALSE(v.overall_pass);
    CHECK_FALSE(v.levels[0].pass);
    REQUIRE(v.levels[0].witness.has_value());
}

TEST_CASE("nonsplit Cartan: passes over the base field, fails over its quadratic extension") {
    const auto d = nonsplit_cartan_datum(3);
    TruncatedLoopGroupModel base(2, 3, 1, 2);
    CHECK(d.h_enumerate(base).size() == 27);  // |H| = q^3

    const auto v = check_geometric_supercuspidality(d, 2);
    REQUIRE(v.levels.size() == 2);
    CHECK(v.levels[0].pass);
    CHECK_FALSE(v.levels[1].pass);
    CHECK_FALSE(v.overall_pass);
    REQUIRE(v.levels[1].witness.has_value());
    // the witness is a Borel conjugate defined over F9
    CHECK(v.levels[1].witness->radical == "borel");

    // a split element already fails at n=1
    const auto ds = cartan_trace_datum(3, true);
    const auto vs = check_geometric_supercuspidality(ds, 1);
    CHECK_FALSE(vs.levels[0].pass);

    CHECK_THROWS_AS(nonsplit_cartan_datum(9), std::invalid_argument);
    CHECK_THROWS_AS(nonsplit_cartan_datum(4), std::invalid_argument);
}

TEST_CASE("verdicts are invariant under conjugating the datum") {
    const auto d = epipelagic_sl2_datum(3, true, false);
    // transport H and the form by a fixed group element
    TruncatedLoopGroupModel base(2, 3, 1, 2);
    LoopMatrix g0 = base.identity();
    base.at(g0, 1, 0).c[0] = 2;  // lower elementary
    MonomialDatumModel moved = d;
    moved.h_member = [d, g0](const TruncatedLoopGroupModel& model, const LoopMatrix& x) {
        const LoopMatrix back = model.mul(model.mul(model.inverse(g0), x), g0);
        return d.h_member(model, back);
    };
    moved.linear_form = [d, g0](const TruncatedLoopGroupModel& model, const LoopMatrix& x) {
        const LoopMatrix back = model.mul(model.mul(model.inverse(g0), x), g0);
        return d.linear_form(model, back);
    };
    moved.h_enumerate = [d, g0](const TruncatedLoopGroupModel& model) {
        auto pts = d.h_enumerate(model);
        for (auto& x : pts) x = model.mul(model.mul(g0, x), model.inverse(g0));
        return pts;
    };
    const auto v0 = check_geometric_supercuspidality(d, 1);
    const auto v1 = check_geometric_supercuspidality(moved, 1);
    CHECK(v0.levels[0].pass == v1.levels[0].pass);
}

TEST_CASE("budget exhaustion produces a partial verdict") {
    const auto d = epipelagic_sl2_datum(3, true, true);
    const auto v = check_geometric_supercuspidality(d, 1, /*budget=*/8);
    CHECK_FALSE(v.complete);
    REQUIRE(v.levels.size() == 1);
    CHECK_FALSE(v.levels[0].complete);
}
