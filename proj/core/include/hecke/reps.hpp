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

#ifndef HECKE_REPS_HPP
#define HECKE_REPS_HPP

#include <map>
#include <string>
#include <vector>

#include "hecke/root_system.hpp"

namespace hecke {

// Irreducible highest-weight representation given by its full
// weight-multiplicity table (Freudenthal recursion).
struct HighestWeightRep {
    CartanType type;
    Weight highest;
    std::map<Weight, BigInt> mult;

    BigInt dim() const;
    std::vector<Weight> support() const;
};

// Formal sum of irreducibles, recorded by their highest weights.
struct RepSum {
    std::vector<Weight> summands;

    bool empty() const { return summands.empty(); }
};

// Weyl dimension formula; exact rational arithmetic with an integral result.
// Throws std::invalid_argument for non-dominant input.
BigInt weyl_dim(const RootDatum& datum, const Weight& lambda);

// Full weight table by the Freudenthal recursion.
HighestWeightRep weight_multiplicities(const RootDatum& datum, const Weight& lambda);

// Decomposition of V_lambda (x) V_mu into irreducibles (Brauer-Klimyk).
std::map<Weight, BigInt> tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu);

// Fundamental weights whose Weyl orbit exhausts the weights of their
// irreducible representation.
std::vector<Weight> minuscule_representations(const RootDatum& datum);

// max over weights mu of V and positive coroots beta of |<mu, beta^vee>|.
BigInt max_coroot_pairing(const RootDatum& datum, const RepSum& v);

// Highest weight of the adjoint representation.
Weight adjoint_weight(const RootDatum& datum);

// The finite group Lambda_weight / Lambda_root: class handles are canonical
// representatives chosen during enumeration.
struct CentralClasses {
    std::vector<Weight> reps;  // reps[0] is the trivial class

    std::size_t size() const { return reps.size(); }
};
CentralClasses central_classes(const RootDatum& datum);
// Index into central_classes().reps of the class of w.
std::size_t central_class_of(const RootDatum& datum, const CentralClasses& classes, const Weight& w);

// Do the weights of V span the rational weight space?
bool weights_span(const RootDatum& datum, const RepSum& v);

// A faithful representation all of whose weight/coroot pairings are small.
// For p > 2: adjoint for the trivial central character (the 7-dimensional
// fundamental for G2), the minuscule representation for each nontrivial one.
// For p = 2: the sum of all minuscule representations, valid only when the
// center is nontrivial.
struct FaithfulRepResult {
    bool ok = false;
    RepSum rep;
    std::string reason;            // set when !ok
    BigInt max_pairing;            // filled when ok
    bool center_nontrivial = false;
};
FaithfulRepResult faithful_low_pairing_rep(const RootDatum& datum, long long p);

// max over weights mu of V of -<mu, lambda>; the largest downward weight of
// the G_m-representation V composed with the cocharacter lambda.
BigInt brace_w(const RootDatum& datum, const RepSum& v, const Coweight& lambda);

// All dominant weights with weyl_dim <= max_dim, sorted by (dim, coords).
std::vector<Weight> dominant_weights_up_to_dim(const RootDatum& datum, const BigInt& max_dim);

}  // namespace hecke

#endif
