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

#ifndef HECKE_BASE_CHANGE_HPP
#define HECKE_BASE_CHANGE_HPP

#include <functional>
#include <string>
#include <vector>

#include "hecke/loop_group.hpp"

namespace hecke {

// Enumerable sigma-stable model: a carrier subset of a truncated loop group
// over F_{q^L}, the q-power Frobenius sigma acting entrywise on coefficients,
// a sigma-stable subgroup J, and the compatible character family
//   chi_n(g) = psi(Tr_{F_{q^n}/F_p}(form(g)))  on the sigma^n-fixed points.
class FrobeniusModel {
  public:
    FrobeniusModel(TruncatedLoopGroupModel ambient, long long q, int big_l,
                   std::vector<LoopMatrix> universe,
                   std::function<bool(const LoopMatrix&)> j_member,
                   std::function<GaloisField::Elt(const LoopMatrix&)> form);

    const TruncatedLoopGroupModel& model() const { return model_; }
    long long q() const { return q_; }
    int big_l() const { return big_l_; }
    long long p() const { return model_.p(); }
    const std::vector<LoopMatrix>& universe() const { return universe_; }

    LoopMatrix sigma(const LoopMatrix& g, int l = 1) const;
    bool sigma_fixed(const LoopMatrix& g, int l) const { return sigma(g, l) == g; }
    bool in_j(const LoopMatrix& g) const { return j_member_(g); }

    // chi_n on sigma^n-fixed elements of J; the exponent of the p-th root of
    // unity. Throws when g is not sigma^n-fixed or n does not divide L.
    long long chi(int n, const LoopMatrix& g) const;

  private:
    TruncatedLoopGroupModel model_;
    long long q_;
    int big_l_;
    std::vector<LoopMatrix> universe_;
    std::function<bool(const LoopMatrix&)> j_member_;
    std::function<GaloisField::Elt(const LoopMatrix&)> form_;
};

// The upper-unipotent model over F_{q^L}[t]/t^m with the leading-coefficient
// additive form: the standard small test bench for the twisted identities.
FrobeniusModel unipotent_sl2_model(long long q, int big_l, int m);

struct LangReport {
    bool surjective = false;
    bool degenerate = false;  // sigma^l acts trivially: image collapses
    std::size_t image_size = 0;
    std::size_t domain_size = 0;
    std::vector<LoopMatrix> defects;  // J-points missed by g -> sigma^l(g) g^{-1} (capped)
};

// Finite shadow of the Lang-map surjectivity axiom on the enumerated
// J-points; exact for the algebraic-closure statement only in the limit.
LangReport lang_check(const FrobeniusModel& fm, int l, std::size_t defect_cap = 16);

// A solution of the two twisted equations
//   c^{-1} sigma^l(c) = gamma^a,   delta = c gamma^b sigma^j(c)^{-1}
// (the finite-friendly rewriting of the semidirect-product system).
struct KottwitzSolution {
    LoopMatrix gamma, delta, c;
    int l = 0, j = 0, a = 0, b = 0;
};

// Brute force over the universe: all c (with delta derived and kept only when
// sigma^l-fixed). Requires a l - b j = 1 and sigma-fixed gamma.
std::vector<KottwitzSolution> solve_kottwitz(const FrobeniusModel& fm, const LoopMatrix& gamma, int l,
                                             int j, int a, int b, std::size_t budget = 1'000'000);

// chi(gamma) = chi_E(delta), compared exactly as root-of-unity exponents.
// Throws std::invalid_argument when gamma or delta lies outside J.
bool verify_commutator_identity(const FrobeniusModel& fm, const KottwitzSolution& sol);

// N delta = delta sigma(delta) ... sigma^{l-1}(delta).
LoopMatrix norm(const FrobeniusModel& fm, const LoopMatrix& delta, int l);

// N delta = c gamma c^{-1}, checked exactly.
bool verify_norm_fact(const FrobeniusModel& fm, const KottwitzSolution& sol);

}  // namespace hecke

#endif
