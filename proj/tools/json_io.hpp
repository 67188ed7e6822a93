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

#ifndef HECKE_TOOLS_JSON_IO_HPP
#define HECKE_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "hecke/base_change.hpp"
#include "hecke/mgs.hpp"
#include "hecke/q_analogs.hpp"
#include "hecke/reps.hpp"
#include "hecke/root_system.hpp"
#include "hecke/satake.hpp"
#include "hecke/weight_polytope.hpp"
#include "hecke/weil.hpp"

// JSON schemas for every surface the command line exposes. Conventions:
//  - weights / coweights: arrays of integers in fundamental(-co)weight coords;
//  - polynomials: arrays of [exponent, coefficient-string] pairs (exponents
//    are q-powers unless the field is named v_coeffs, which are sqrt-q powers);
//  - big integers: decimal strings;
//  - complex numbers: [re, im] pairs.
namespace hecke::jsonio {

using nlohmann::json;

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);
json coweight_to_json(const Coweight& c);
Coweight coweight_from_json(const json& j);

json root_datum_to_json(const RootDatum& d);
RootDatum root_datum_from_json(const json& j);

json rep_to_json(const HighestWeightRep& rep);
json qpoly_to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const json& j);

json faces_to_json(const RootDatum& d, const RepSum& v, const std::vector<Face>& faces);
json parabolic_to_json(const RootDatum& d, const ParabolicDescriptor& pd);

json satake_to_json(const SatakeParameter& t);
SatakeParameter satake_from_json(const json& j);
json witness_to_json(const WitnessResult& w);
json radius_to_json(const SpectralRadiusResult& r);
TraceSequence trace_sequence_from_json(const json& j);

json weil_claim_to_json(const WeilNumberClaim& c);
WeilNumberClaim weil_claim_from_json(const json& j);
json verify_weil_to_json(const VerifyWeilResult& r);
json exponential_sum_to_json(const ExponentialSum& s);
std::vector<BigInt> sequence_from_json(const json& j);

json mgs_datum_to_json(const MonomialDatumModel& d);
json mgs_verdict_to_json(const MonomialDatumModel& d, const MgsVerdict& v);
json lang_report_to_json(const FrobeniusModel& fm, const LangReport& r);
json kottwitz_solutions_to_json(const FrobeniusModel& fm, const std::vector<KottwitzSolution>& sols);

// Stable machine-readable envelope shared by all subcommands.
json report_envelope(const std::string& command, const json& inputs, json outputs, double wall_ms,
                     json provenance = json::object());

}  // namespace hecke::jsonio

#endif
