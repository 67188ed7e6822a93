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

#ifndef HECKE_POLY_ROOTS_HPP
#define HECKE_POLY_ROOTS_HPP

#include <complex>
#include <vector>

#include "hecke/numeric.hpp"

namespace hecke {

// All complex roots of the monic polynomial
//   x^n + c[n-1] x^{n-1} + ... + c[0],
// via the companion-matrix eigenproblem plus a few Newton refinement steps.
std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& c);

// Rational-coefficient convenience overload.
std::vector<std::complex<double>> companion_roots(const std::vector<BigRat>& c);

// Attempts to recognize z as a rational with denominator <= max_den that is
// an exact root of the monic polynomial coeffs (constant first). Uses
// continued fractions on the real part and verifies exactly.
bool reconstruct_rational_root(const std::vector<BigRat>& monic_coeffs, std::complex<double> z,
                               long long max_den, BigRat& out);

}  // namespace hecke

#endif
