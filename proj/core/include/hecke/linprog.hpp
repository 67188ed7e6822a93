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

#ifndef HECKE_LINPROG_HPP
#define HECKE_LINPROG_HPP

#include <vector>

#include "hecke/numeric.hpp"

namespace hecke {

// Decides over the exact rationals whether the origin lies in the convex hull
// of a finite point set (phase-1 simplex with Bland's rule). When it does
// not, `separator` carries a functional with separator . p <= -1 for every
// input point, extracted from the Farkas certificate.
struct HullResult {
    bool inside = false;
    std::vector<BigRat> separator;
};

HullResult zero_in_hull(const std::vector<std::vector<BigRat>>& points);

}  // namespace hecke

#endif
