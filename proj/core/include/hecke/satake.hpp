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

#ifndef HECKE_SATAKE_HPP
#define HECKE_SATAKE_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hecke/qpolynomial.hpp"
#include "hecke/reps.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

// Semisimple dual-torus element, given by its nonzero values on the
// fundamental-weight basis of the character lattice. Evaluation on a weight
// is the corresponding monomial in the values.
struct SatakeParameter {
    CartanType type;
    std::vector<std::complex<double>> values;
};

std::complex<double> eval_weight(const SatakeParameter& t, const Weight& mu);

// tr(t | V_lambda) = sum over the weight table of t^mu.
std::complex<double> tr_lambda(const RootDatum& datum, const SatakeParameter& t, const Weight& lambda);

// The principal parameter rho(q): value q^{<mu, rho^vee>} on the weight mu.
// Requires q > 1.
SatakeParameter principal_parameter(const RootDatum& datum, double q);

// Exact counterpart of tr_lambda at the principal parameter, as a Laurent
// polynomial in v = sqrt(q): sum of v^{<mu, 2 rho^vee>}.
QPolynomial principal_trace_poly(const RootDatum& datum, const Weight& lambda);

// Compact (unitary) parameter test: every basis value within tol of the unit
// circle.
bool is_tempered(const SatakeParameter& t, double tol = 1e-9);

// Satake parameter of the degree-n base change: pointwise n-th power.
SatakeParameter base_change(const SatakeParameter& t, long long n);

// The transported parameter w.t with (w.t)^mu = t^{w^{-1} mu}.
SatakeParameter weyl_transform(const RootDatum& datum, const SatakeParameter& t, const WeylElement& w);

// Power sums tr(t^n | V) for n = 1..N, with dim V attached. Exact entries
// when the eigenvalues are known rationals, floating otherwise.
struct TraceSequence {
    std::vector<BigRat> exact;                  // used when is_exact
    std::vector<std::complex<double>> numeric;  // used otherwise
    long long dim_v = 0;
    bool is_exact = false;

    std::size_t size() const { return is_exact ? exact.size() : numeric.size(); }
};

TraceSequence trace_sequence_from_parameter(const RootDatum& datum, const SatakeParameter& t,
                                            const Weight& lambda, std::size_t n_terms);

struct SpectralRadiusResult {
    double rho = 0;
    std::optional<BigRat> rho_exact;                // set when every root was recognized exactly
    std::vector<std::complex<double>> eigenvalues;  // with multiplicity, dim_v entries
    std::vector<std::pair<BigRat, long long>> exact_eigenvalues;  // recognized rational roots
    std::string conditioning;                       // float-path diagnostics
};

// Newton's identities turn the power sums into the characteristic polynomial;
// the spectral radius is the maximal root modulus. Exact rational pipeline for
// exact input (with square-free reduction and rational-root recognition),
// least-squares Hankel fit for floating input. Throws std::domain_error when
// the sequence is inconsistent with every endomorphism of the given dimension.
SpectralRadiusResult spectral_radius_from_traces(const TraceSequence& seq);

// Bounded search for amplification witnesses: the first (n, k) in (k+n)-graded
// order with |tr(t^n | V_{k lambda0})| > C dim V_{k lambda0}. An exhausted
// search certifies the bound on the searched box only, nothing beyond it.
struct WitnessResult {
    bool found = false;
    long long n = 0, k = 0;
    double trace_abs = 0;
    double dim = 0;
    long long boxes_searched = 0;
};

WitnessResult temperedness_witness(const RootDatum& datum, const SatakeParameter& t, const Weight& lambda0,
                                   double c_bound, long long n_max, long long k_max);

}  // namespace hecke

#endif
