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

#ifndef HECKE_Q_ANALOGS_HPP
#define HECKE_Q_ANALOGS_HPP

#include <map>
#include <string>

#include "hecke/qpolynomial.hpp"
#include "hecke/reps.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

// Weyl-invariant element of the group algebra of the weight lattice with
// one-variable polynomial coefficients.
using WeightFunction = std::map<Weight, QPolynomial>;

// q-analog of the Kostant partition function: sum over multisets of positive
// roots with total nu of q^(multiset size), as a plain polynomial in q.
QPolynomial q_kostant(const RootDatum& datum, const Coord& nu_root_coords);

// Alternating Weyl sum of q-Kostant values:
//   K_{lambda,mu}(q) = sum_w sgn(w) P_q(w(lambda+rho) - (mu+rho)).
// Specializing q=1 recovers the weight multiplicity.
QPolynomial lusztig_q_analog(const RootDatum& datum, const Weight& lambda, const Weight& mu);

// Hall-Littlewood polynomial P_mu as a weight-multiset polynomial with
// coefficients in Z[t] (t-exponents stored directly). At t=0 this is the
// Weyl character chi_mu; for minuscule mu it is the plain orbit sum.
WeightFunction hall_littlewood(const RootDatum& datum, const Weight& mu);

// Poincare polynomial of the stabilizer of mu in W.
QPolynomial stabilizer_poincare(const RootDatum& datum, const Weight& mu);

// Weyl character chi_lambda as a WeightFunction with constant coefficients.
WeightFunction weyl_character(const RootDatum& datum, const Weight& lambda);

// The finite set of candidate variable/twist conventions for the character
// expansion chi_lambda = sum_mu K~_{lambda,mu} P_mu. The working convention is
// found once by calibration against rank-1 and rank-2 closed forms, then
// frozen for every later type.
enum class KatoConvention {
    plain,                  // K(q) with t := q, no twist
    inverse_variable,       // K(q^{-1}) t-normalized to lowest degree 0
    twist_positive,         // q^{<lambda-mu, rho^vee>} K(q)
    twist_negative,         // q^{-<lambda-mu, rho^vee>} K(q)
    inverse_twist_positive, // q^{<lambda-mu, rho^vee>} K(q^{-1})
    inverse_twist_negative, // q^{-<lambda-mu, rho^vee>} K(q^{-1})
};
const char* kato_convention_name(KatoConvention c);

// The unique convention passing the calibration suite; computed once and
// cached for the process lifetime.
KatoConvention calibrated_kato_convention();

struct KatoReport {
    bool ok = false;
    KatoConvention convention = KatoConvention::plain;
    std::string diff;  // structured mismatch description when !ok
};

// Checks chi_lambda == sum over dominant mu <= lambda of the convention-
// twisted Lusztig q-analog times P_mu, as weight-multiset polynomials.
KatoReport verify_kato(const RootDatum& datum, const Weight& lambda);
KatoReport verify_kato(const RootDatum& datum, const Weight& lambda, KatoConvention convention);

// d(lambda) = <lambda, 2 rho>, the dimension of the affine Grassmannian cell
// and the degree of the lambda-Hecke operator.
BigInt d_lambda(const RootDatum& datum, const Coweight& lambda);

// Exact value in Z[sqrt q]: int_part + sqrt_part * sqrt(q).
struct ICStalkValue {
    BigInt int_part;
    BigInt sqrt_part;
    BigInt q;
    bool below_support = false;  // set when mu is not below lambda

    bool operator==(const ICStalkValue&) const = default;
};

// Frobenius-trace shadow of the intersection-cohomology stalk: the calibrated
// q-power twist of the Lusztig q-analog, evaluated exactly at q. Normalized
// so that a minuscule lambda gives the constant-sheaf value q^{<lambda,rho>}
// and the q=1 shadow of the untwisted part is the weight multiplicity.
ICStalkValue ic_stalk_trace(const RootDatum& datum, const Weight& lambda, const Weight& mu, const BigInt& q);

}  // namespace hecke

#endif
