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

#include <random>
#include <set>

#include "hecke/weil.hpp"

using namespace hecke;

namespace {

std::vector<BigInt> forward(const std::vector<ExponentialSum::Term>& terms, std::size_t n) {
    std::vector<BigInt> s;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt acc = 0;
        for (const auto& t : terms) {
            BigInt p = 1;
            for (std::size_t i = 0; i < k; ++i) p *= t.root;
            acc += BigInt(t.sign) * t.multiplicity * p;
        }
        s.push_back(acc);
    }
    return s;
}

}  // namespace

TEST_CASE("verify_weil on explicit claims") {
    // x - q at weight 2
    WeilNumberClaim c1{{BigInt(-4), BigInt(1)}, BigInt(4), 2};
    CHECK(verify_weil(c1).ok);

    // x^2 + x + 2 at q=2, weight 1: both roots have squared modulus 2
    WeilNumberClaim c2{{BigInt(2), BigInt(1), BigInt(1)}, BigInt(2), 1};
    const auto r2 = verify_weil(c2);
    CHECK(r2.ok);
    REQUIRE(r2.roots.size() == 2);
    for (const auto& r : r2.roots) CHECK(r.modulus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    // x - (q+1) at weight 2 must fail
    WeilNumberClaim c3{{BigInt(-5), BigInt(1)}, BigInt(4), 2};
    CHECK_FALSE(verify_weil(c3).ok);

    // exact claims stay verified as the tolerance shrinks
    for (double tol = 1e-3; tol >= 1e-9; tol /= 2) {
        CHECK(verify_weil(c1, tol).ok);
        CHECK(verify_weil(c2, tol).ok);
    }

    // non-monic and constant inputs rejected
    CHECK_THROWS_AS(verify_weil(WeilNumberClaim{{BigInt(1), BigInt(2)}, BigInt(2), 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_weil(WeilNumberClaim{{BigInt(1)}, BigInt(2), 0}), std::invalid_argument);
}

TEST_CASE("power-sum recovery on the worked examples") {
    // 3^n - 2^n
    {
        std::vector<BigInt> s;
        for (int n = 1; n <= 8; ++n) {
            BigInt a = 1, b = 1;
            for (int i = 0; i < n; ++i) {
                a *= 3;
                b *= 2;
            }
            s.push_back(a - b);
        }
        const auto r = recover_power_sum(s);
        REQUIRE(r.determined);
        REQUIRE(r.terms.size() == 2);
        CHECK(r.terms[0].root == 2);
        CHECK(r.terms[0].sign == -1);
        CHECK(r.terms[0].multiplicity == 1);
        CHECK(r.terms[1].root == 3);
        CHECK(r.terms[1].sign == 1);
    }

    // constant sequence c = c * 1^n
    {
        const std::vector<BigInt> s(6, BigInt(7));
        const auto r = recover_power_sum(s);
        REQUIRE(r.determined);
        REQUIRE(r.terms.size() == 1);
        CHECK(r.terms[0].root == 1);
        CHECK(r.terms[0].sign == 1);
        CHECK(r.terms[0].multiplicity == 7);
    }

    // 5^n + 2 * 2^n
    {
        std::vector<BigInt> s;
        for (int n = 1; n <= 8; ++n) {
            BigInt a = 1, b = 1;
            for (int i = 0; i < n; ++i) {
                a *= 5;
                b *= 2;
            }
            s.push_back(a + 2 * b);
        }
        const auto r = recover_power_sum(s);
        REQUIRE(r.determined);
        REQUIRE(r.terms.size() == 2);
        CHECK(r.terms[0].root == 2);
        CHECK(r.terms[0].multiplicity == 2);
        CHECK(r.terms[1].root == 5);
        CHECK(r.terms[1].multiplicity == 1);
    }
}

TEST_CASE("power-sum recovery inverts forward generation on random signed multisets") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long long> roots(-50, 50), mult(1, 3), sgn(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        std::set<long long> used{0};
        std::vector<ExponentialSum::Term> terms;
        const int k = 1 + static_cast<int>(rng() % 8);
        while (static_cast<int>(terms.size()) < k) {
            const long long root = roots(rng);
            if (used.contains(root)) continue;
            used.insert(root);
            ExponentialSum::Term t;
            t.root = root;
            t.sign = sgn(rng) ? 1 : -1;
            t.multiplicity = mult(rng);
            terms.push_back(t);
        }
        // 3x oversampled relative to the recurrence order
        const auto seq = forward(terms, terms.size() * 3);
        const auto r = recover_power_sum(seq);
        REQUIRE(r.determined);
        REQUIRE(r.terms.size() == terms.size());
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.root < b.root; });
        for (std::size_t i = 0; i < terms.size(); ++i) {
            CHECK(r.terms[i].root == terms[i].root);
            CHECK(r.terms[i].sign == terms[i].sign);
            CHECK(r.terms[i].multiplicity == terms[i].multiplicity);
        }
    }
}

TEST_CASE("underdetermined and non-integral sequences are flagged") {
    // too few terms for the implied order
    const std::vector<BigInt> s{BigInt(1), BigInt(5), BigInt(13)};
    const auto r = recover_power_sum(s);
    CHECK_FALSE(r.determined);
    CHECK(r.note.find("undetermined") != std::string::npos);

    // Fibonacci: irrational characteristic roots
    std::vector<BigInt> fib{1, 1};
    for (int i = 2; i < 12; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
    const auto rf = recover_power_sum(fib);
    CHECK_FALSE(rf.determined);
    CHECK(rf.note.find("non-integral") != std::string::npos);

    // transient prefix: zero characteristic root
    const std::vector<BigInt> tz{BigInt(5), BigInt(0), BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
    const auto rz = recover_power_sum(tz);
    CHECK_FALSE(rz.determined);
}

TEST_CASE("dimension bookkeeping") {
    CHECK(dim_bun(3, 0, 2) == 3);
    for (long long dg : {1LL, 3LL, 8LL, 14LL}) CHECK(dim_bun(dg, 1, 0) == 0);
    CHECK(dim_hecke(3, 0, 2, BigInt(5)) == 8);

    const RootDatum a1 = build_root_system("A1");
    // single degree-1 place carrying lambda: d_of_w = d_lambda
    const Coweight om(Coord{1});
    CHECK(d_of_w(a1, {{1, om}}) == d_lambda(a1, om));
    // two places of degrees 1 and 2 with the same lambda: 3 d_lambda
    CHECK(d_of_w(a1, {{1, om}, {2, om}}) == 3 * d_lambda(a1, om));
    CHECK(d_of_w(a1, {}) == 0);

    // dim_hecke - dim_bun = d(W) always
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const long long dg = 1 + static_cast<long long>(rng() % 10);
        const long long g = rng() % 4, dd = rng() % 4;
        std::vector<WeightedPlace> w;
        for (int i = 0; i < static_cast<int>(rng() % 3); ++i)
            w.push_back({1 + static_cast<long long>(rng() % 3), Coweight(Coord{static_cast<long long>(rng() % 5)})});
        const BigInt dw = d_of_w(a1, w);
        CHECK(dim_hecke(dg, g, dd, dw) - dim_bun(dg, g, dd) == dw);
    }
}

TEST_CASE("average bound exponent and weight caps") {
    // the rank-1 projective-line instance with four-dimensional H: exponent -1
    CHECK(avg_bound_exponent(3, 0, 2, 4) == -1);

    // with both Hecke weights zero the cap reduces to the exponent
    CHECK(weil_weight_cap(3, 0, 2, 4, 0, 0) == BigRat(avg_bound_exponent(3, 0, 2, 4)));

    CHECK(weil_weight_cap(8, 2, 1, 0, 2, 2) == 18);

    // the proof-form bound is the stated bound doubled when both match shape
    CHECK(weil_weight_cap_proof_form(3, 0, 2, 4, 0, 0) == -2);
    CHECK(weil_weight_cap_proof_form(8, 2, 1, 0, 2, 2) == 36);
}
