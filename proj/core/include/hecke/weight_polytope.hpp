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

#ifndef HECKE_WEIGHT_POLYTOPE_HPP
#define HECKE_WEIGHT_POLYTOPE_HPP

#include <vector>

#include "hecke/reps.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

// A proper face of the convex hull of a weight support, recorded as the set
// of weights maximizing an integral linear functional. The normal is stored
// as a primitive integral coweight, so <w, normal> is the value of the
// functional on w.
struct Face {
    Coweight normal;
    std::vector<Weight> face_weights;        // the maximizers, sorted
    std::vector<Weight> complement_weights;  // the rest of the support, sorted
};

// Faces of conv(weights of V). Multiplicities are ignored; geometry only
// depends on the support. With up_to_weyl the list is cut down to canonical
// representatives (lexicographically smallest weight subset per W-orbit).
// Throws std::domain_error when the support is a single point (degenerate)
// or larger than the enumeration guard.
std::vector<Face> weight_polytope_faces(const RootDatum& datum, const RepSum& v, bool up_to_weyl = false);

// Stabilizer data of ker(e) for the idempotent attached to a face:
// the set of roots whose raising operators preserve the span of the
// complement weights, certified to be of the form
// chamber . (Levi roots + positive roots).
struct ParabolicDescriptor {
    std::vector<std::size_t> levi_simple_roots;  // indices of simple roots in the Levi
    WeylElement chamber;      // maps the standard descriptor onto this one
    Coweight dominant_cochar;  // dominant representative of the stabilizer cocharacter
};

ParabolicDescriptor face_parabolic(const RootDatum& datum, const RepSum& v, const Face& face);

// True when every root connecting two face weights has its negative in the
// stabilizing root set; the unipotent radical then acts trivially on the
// quotient by the complement span.
bool check_levi_action(const RootDatum& datum, const RepSum& v, const Face& face);

// An integral coweight pairing nonnegatively with every root of the parabolic
// and strictly negatively with every root outside (chamber-adjusted sum of
// the fundamental coweights dual to the non-Levi simple roots).
Coweight cocharacter_for_parabolic(const RootDatum& datum, const ParabolicDescriptor& pd);

// Roots of the parabolic described by pd, as weight-coordinate vectors
// (positive and negative roots both included).
std::vector<Weight> parabolic_roots(const RootDatum& datum, const ParabolicDescriptor& pd);

// Human-readable Levi type, e.g. "A1xA1" or "T" for the torus.
std::string levi_type_string(const RootDatum& datum, const ParabolicDescriptor& pd);

// Weight support of a representation sum, deduplicated and sorted.
std::vector<Weight> rep_support(const RootDatum& datum, const RepSum& v);

}  // namespace hecke

#endif
