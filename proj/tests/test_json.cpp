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

#include "json_io.hpp"

using namespace hecke;
using jsonio::json;

TEST_CASE("root datum round trip") {
    const RootDatum g2 = build_root_system("G2");
    const json j = jsonio::root_datum_to_json(g2);
    const RootDatum back = jsonio::root_datum_from_json(j);
    CHECK(back.type() == g2.type());
    CHECK(jsonio::root_datum_to_json(back) == j);

    json tampered = j;
    tampered["cartan_matrix"][0][1] = 7;
    CHECK_THROWS_AS(jsonio::root_datum_from_json(tampered), std::invalid_argument);
}

TEST_CASE("weights, coweights, polynomials round trip") {
    const Weight w(Coord{3, -1});
    CHECK(jsonio::weight_from_json(jsonio::weight_to_json(w)) == w);
    const Coweight c(Coord{0, 5});
    CHECK(jsonio::coweight_from_json(jsonio::coweight_to_json(c)) == c);

    QPolynomial p = QPolynomial::monomial(3, BigInt(7)) - QPolynomial::monomial(-2, BigInt(123456789));
    CHECK(jsonio::qpoly_from_json(jsonio::qpoly_to_json(p)) == p);
}

TEST_CASE("satake parameter round trip") {
    SatakeParameter t{CartanType::parse("B2"), {{0.6, 0.8}, {1.5, 0.0}}};
    const json j = jsonio::satake_to_json(t);
    const SatakeParameter back = jsonio::satake_from_json(j);
    CHECK(back.type == t.type);
    for (std::size_t i = 0; i < t.values.size(); ++i) CHECK(back.values[i] == t.values[i]);
    CHECK(jsonio::satake_to_json(back) == j);

    json bad = j;
    bad["values"].erase(1);
    CHECK_THROWS_AS(jsonio::satake_from_json(bad), std::invalid_argument);
}

TEST_CASE("weil claims and sequences round trip") {
    WeilNumberClaim claim{{BigInt(2), BigInt(1), BigInt(1)}, BigInt(2), 1};
    const json j = jsonio::weil_claim_to_json(claim);
    const auto back = jsonio::weil_claim_from_json(j);
    CHECK(back.min_poly == claim.min_poly);
    CHECK(back.q == claim.q);
    CHECK(back.weight == claim.weight);

    const json seq = json::array({"12", "-5", 7});
    const auto s = jsonio::sequence_from_json(seq);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 12);
    CHECK(s[1] == -5);
    CHECK(s[2] == 7);
}

TEST_CASE("trace sequences from JSON") {
    json j;
    j["dim"] = 2;
    j["exact"] = true;
    j["entries"] = json::array({"5/2", "17/4"});
    const auto seq = jsonio::trace_sequence_from_json(j);
    REQUIRE(seq.is_exact);
    CHECK(seq.exact[0] == BigRat(5, 2));
    const auto r = spectral_radius_from_traces(seq);
    REQUIRE(r.rho_exact.has_value());
    CHECK(*r.rho_exact == 2);
}

TEST_CASE("report envelope is stable") {
    const json inputs = {{"argv", {"rep", "dim"}}};
    const json a = jsonio::report_envelope("rep dim", inputs, json{{"dim", "7"}}, 1.0);
    const json b = jsonio::report_envelope("rep dim", inputs, json{{"dim", "7"}}, 2.0);
    CHECK(a.at("inputs_digest") == b.at("inputs_digest"));
    json a2 = a, b2 = b;
    a2.erase("wall_time_ms");
    b2.erase("wall_time_ms");
    CHECK(a2 == b2);
}

TEST_CASE("verdict serialization carries the coverage caveat") {
    const auto d = epipelagic_sl2_datum(3, true, false);
    const auto v = check_geometric_supercuspidality(d, 1);
    const json j = jsonio::mgs_verdict_to_json(d, v);
    CHECK(j.at("overall_pass") == false);
    CHECK(j.at("caveat").get<std::string>().find("not a proof") != std::string::npos);
    REQUIRE(j.at("levels").size() == 1);
    CHECK(j.at("levels")[0].contains("witness"));
    CHECK(j.at("datum").at("git_semistable") == false);
}
