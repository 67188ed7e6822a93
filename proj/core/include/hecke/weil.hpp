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

#ifndef HECKE_WEIL_HPP
#define HECKE_WEIL_HPP

#include <complex>
#include <string>
#include <vector>

#include "hecke/q_analogs.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

// Claim that every complex root of min_poly has modulus q^{weight/2}.
// Coefficients are integers, constant term first; the polynomial must be
// monic (leading coefficient one).
struct WeilNumberClaim {
    std::vector<BigInt> min_poly;
    BigInt q;
    long long weight = 0;
};

struct WeilRootReport {
    std::complex<double> root;
    double modulus = 0;
    double target = 0;
    bool ok = false;
};

struct VerifyWeilResult {
    bool ok = false;
    std::vector<WeilRootReport> roots;
};

// Finds all complex roots (companion matrix plus refinement) and checks each
// modulus against q^{weight/2} within tol * q^{weight/2}. Throws
// std::invalid_argument for non-monic or constant input.
VerifyWeilResult verify_weil(const WeilNumberClaim& claim, double tol = 1e-9);

// S_n = sum_i sign_i * multiplicity_i * root_i^n, recovered from an integer
// sequence S_1, S_2, ... by exact Berlekamp-Massey. Non-integral
// characteristic roots and underdetermined sequences are flagged rather than
// guessed.
struct ExponentialSum {
    struct Term {
        BigInt root;
        int sign = 1;
        BigInt multiplicity = 1;
    };
    std::vector<Term> terms;
    bool determined = false;
    long long recurrence_order = 0;
    std::string note;  // set when !determined or when roots were flagged
};

ExponentialSum recover_power_sum(const std::vector<BigInt>& s);

// Moduli-space dimension bookkeeping.
BigInt dim_bun(long long dim_g, long long genus, long long deg_d);
BigInt dim_hecke(long long dim_g, long long genus, long long deg_d, const BigInt& d_w);

// d(W) = sum over places of 2 deg(x) <W_x, rho>.
struct WeightedPlace {
    long long degree = 1;
    Coweight coweight;
};
BigInt d_of_w(const RootDatum& datum, const std::vector<WeightedPlace>& w);

// Exponent in the averaged trace bound: dim G (g + |D| - 1) - dim H.
BigInt avg_bound_exponent(long long dim_g, long long genus, long long deg_d, long long dim_h);

// Weight cap on the Weil integers in the trace expansion, as stated:
//   dim G (g+|D|-1) + d(W1)/2 + d(W2)/2 - dim H,
// and the larger bound appearing in the proof:
//   2 dim G (g+|D|-1) - 2 dim H + d(W1) + d(W2).
// Both are reported; the discrepancy is intentional surface area.
BigRat weil_weight_cap(long long dim_g, long long genus, long long deg_d, long long dim_h,
                       const BigInt& d_w1, const BigInt& d_w2);
BigInt weil_weight_cap_proof_form(long long dim_g, long long genus, long long deg_d, long long dim_h,
                                  const BigInt& d_w1, const BigInt& d_w2);

}  // namespace hecke

#endif
