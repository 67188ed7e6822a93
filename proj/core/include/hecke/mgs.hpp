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

#ifndef HECKE_MGS_HPP
#define HECKE_MGS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hecke/linprog.hpp"
#include "hecke/loop_group.hpp"
#include "hecke/root_system.hpp"

namespace hecke {

// Integer weight vectors of a torus action together with the support of a
// candidate character.
struct TorusActionWeights {
    std::vector<Coord> weights;
    std::vector<std::size_t> support;
};

// Hilbert-Mumford for torus actions: semistable iff 0 lies in the convex hull
// of the supported weights (exact rational LP). Empty support is unstable.
bool git_semistable_torus(const TorusActionWeights& w);

// Finite truncated-loop-group model of a monomial datum: the subgroup H cut
// out by a coefficient predicate, and an additive linear form factoring the
// character. Both are coefficient conditions, so they extend to every
// F_{q^n} model unchanged.
struct MonomialDatumModel {
    TruncatedLoopGroupModel base;  // the n=1 model
    std::string h_tag;
    std::string form_tag;
    std::function<bool(const TruncatedLoopGroupModel&, const LoopMatrix&)> h_member;
    std::function<GaloisField::Elt(const TruncatedLoopGroupModel&, const LoopMatrix&)> linear_form;
    // direct point enumeration of H over the given extension model
    std::function<std::vector<LoopMatrix>(const TruncatedLoopGroupModel&)> h_enumerate;
    // torus-action bookkeeping for the GIT criterion, when meaningful
    std::optional<TorusActionWeights> torus;
};

// chi_n(h) = psi(Tr_{F_{q^n}/F_p}(linear_form(h))), recorded by the exponent
// of the p-th root of unity. Construction validates multiplicativity on H
// (exhaustively for small H, sampled beyond) and throws std::domain_error on
// failure.
class ExtendedCharacter {
  public:
    ExtendedCharacter(const MonomialDatumModel& datum, int n);

    const TruncatedLoopGroupModel& model() const { return model_; }
    // exponent in [0, p) of the character value
    long long operator()(const LoopMatrix& h) const;

  private:
    const MonomialDatumModel* datum_;
    TruncatedLoopGroupModel model_;
};

// Standard proper-parabolic radicals: one class for SL2 (the Borel), three
// for SL3 (both maximal parabolics and the Borel).
struct RadicalClass {
    std::string tag;
    std::vector<LoopMatrix> points;  // N<R> inside the given model
};
std::vector<RadicalClass> standard_parabolics(const TruncatedLoopGroupModel& model);

struct MgsWitness {
    std::string radical;
    LoopMatrix transporter;
    std::size_t intersection_size = 0;
};

struct MgsLevelVerdict {
    int n = 0;
    bool pass = false;
    bool complete = true;  // false when the enumeration budget ran out
    std::optional<MgsWitness> witness;
    std::size_t subgroups_checked = 0;
    bool disconnected_intersection_flag = false;  // some intersection not a p-group
};

struct MgsVerdict {
    std::vector<MgsLevelVerdict> levels;
    bool overall_pass = false;
    bool complete = true;
};

// Brute-force Jacquet-nontriviality over F_{q^n} for every n <= n_max: for
// each standard radical N and every conjugate g N g^{-1}, the character must
// be nontrivial on the intersection with H. This is necessary evidence up to
// n_max, not a proof of the for-all-extensions statement.
MgsVerdict check_geometric_supercuspidality(const MonomialDatumModel& datum, int n_max,
                                            std::size_t budget = 1'000'000);

// The rank-1 depth-1/2 example: H the four-dimensional subgroup of matrices
// congruent mod t to upper unipotent ones, with the character supported on
// the chosen coordinates (leading coefficient of the top-right entry, t
// coefficient of the bottom-left entry). The torus scales these by a^2 and
// a^{-2}.
MonomialDatumModel epipelagic_sl2_datum(long long q, bool support_topright, bool support_bottomleft);

// The Lie-algebra-model counterexample: H the congruence kernel mod t with
// the form tr(X B). With split=false, B generates a nonsplit Cartan (no
// eigenvector over F_q, two over F_{q^2}); with split=true it is a split
// regular semisimple element, so the check already fails at n=1.
// Requires q an odd prime.
MonomialDatumModel cartan_trace_datum(long long q, bool split);
inline MonomialDatumModel nonsplit_cartan_datum(long long q) { return cartan_trace_datum(q, false); }

}  // namespace hecke

#endif
