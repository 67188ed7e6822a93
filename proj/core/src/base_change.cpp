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

#include "hecke/base_change.hpp"

#include <algorithm>
#include <set>

namespace hecke {

FrobeniusModel::FrobeniusModel(TruncatedLoopGroupModel ambient, long long q, int big_l,
                               std::vector<LoopMatrix> universe,
                               std::function<bool(const LoopMatrix&)> j_member,
                               std::function<GaloisField::Elt(const LoopMatrix&)> form)
    : model_(std::move(ambient)),
      q_(q),
      big_l_(big_l),
      universe_(std::move(universe)),
      j_member_(std::move(j_member)),
      form_(std::move(form)) {
    // sigma stability of J on the enumerated carrier
    for (const LoopMatrix& g : universe_)
        if (j_member_(g) != j_member_(sigma(g, 1)))
            throw std::invalid_argument("FrobeniusModel: J is not sigma-stable");
}

LoopMatrix FrobeniusModel::sigma(const LoopMatrix& g, int l) const { return model_.frobenius(g, l); }

long long FrobeniusModel::chi(int n, const LoopMatrix& g) const {
    if (big_l_ % n != 0) throw std::invalid_argument("chi: extension degree must divide L");
    if (!sigma_fixed(g, n)) throw std::invalid_argument("chi: element not fixed by sigma^n");
    if (!in_j(g)) throw std::invalid_argument("chi: element outside J");
    const GaloisField::Elt v = form_(g);
    // the form value lies in F_{q^n}; take its trace to the prime field
    const int k = model_.field().degree() / big_l_;  // q = p^k
    return model_.field().subfield_trace_to_prime(v, k * n);
}

FrobeniusModel unipotent_sl2_model(long long q, int big_l, int m) {
    TruncatedLoopGroupModel ambient(2, q, big_l, m);
    std::vector<LoopMatrix> universe;
    for (const RingElt& x : ambient.ring_elements()) {
        LoopMatrix u = ambient.identity();
        ambient.at(u, 0, 1) = x;
        universe.push_back(u);
    }
    auto j_member = [](const LoopMatrix&) { return true; };
    // copy the model into the closure: `ambient` is moved into the
    // FrobeniusModel below, so capture what the form needs by value
    auto form = [r = ambient.r()](const LoopMatrix& g) { return g.a[0 * r + 1].c[0]; };
    return FrobeniusModel(std::move(ambient), q, big_l, std::move(universe), j_member, form);
}

LangReport lang_check(const FrobeniusModel& fm, int l, std::size_t defect_cap) {
    LangReport rep;
    rep.domain_size = fm.universe().size();
    std::set<LoopMatrix> image;
    const auto& model = fm.model();
    for (const LoopMatrix& g : fm.universe()) {
        if (!fm.in_j(g)) continue;
        image.insert(model.mul(fm.sigma(g, l), model.inverse(g)));
    }
    rep.image_size = image.size();
    std::size_t j_points = 0;
    for (const LoopMatrix& g : fm.universe()) {
        if (!fm.in_j(g)) continue;
        ++j_points;
        if (!image.contains(g) && rep.defects.size() < defect_cap) rep.defects.push_back(g);
    }
    rep.domain_size = j_points;
    rep.surjective = image.size() == j_points;
    rep.degenerate = (l % fm.big_l() == 0);
    return rep;
}

std::vector<KottwitzSolution> solve_kottwitz(const FrobeniusModel& fm, const LoopMatrix& gamma, int l,
                                             int j, int a, int b, std::size_t budget) {
    if (a * l - b * j != 1) throw std::invalid_argument("solve_kottwitz: need a l - b j = 1");
    if (!fm.sigma_fixed(gamma, 1)) throw std::invalid_argument("solve_kottwitz: gamma must be sigma-fixed");

    const auto& model = fm.model();
    auto power = [&](const LoopMatrix& x, int e) {
        LoopMatrix acc = model.identity();
        LoopMatrix base = e >= 0 ? x : model.inverse(x);
        for (int i = 0; i < std::abs(e); ++i) acc = model.mul(acc, base);
        return acc;
    };
    const LoopMatrix gamma_a = power(gamma, a);
    const LoopMatrix gamma_b = power(gamma, b);

    std::vector<KottwitzSolution> out;
    std::size_t scanned = 0;
    for (const LoopMatrix& c : fm.universe()) {
        if (++scanned > budget) throw std::domain_error("solve_kottwitz: budget exceeded");
        // relation one: c^{-1} sigma^l(c) = gamma^a
        if (!(model.mul(model.inverse(c), fm.sigma(c, l)) == gamma_a)) continue;
        // relation two determines delta
        const LoopMatrix delta = model.mul(model.mul(c, gamma_b), model.inverse(fm.sigma(c, j)));
        if (!fm.sigma_fixed(delta, l)) continue;
        out.push_back(KottwitzSolution{gamma, delta, c, l, j, a, b});
    }
    return out;
}

bool verify_commutator_identity(const FrobeniusModel& fm, const KottwitzSolution& sol) {
    if (!fm.in_j(sol.gamma) || !fm.in_j(sol.delta))
        throw std::invalid_argument("verify_commutator_identity: gamma or delta outside J");
    return fm.chi(1, sol.gamma) == fm.chi(sol.l, sol.delta);
}

LoopMatrix norm(const FrobeniusModel& fm, const LoopMatrix& delta, int l) {
    const auto& model = fm.model();
    LoopMatrix acc = model.identity();
    for (int i = 0; i < l; ++i) acc = model.mul(acc, fm.sigma(delta, i));
    return acc;
}

bool verify_norm_fact(const FrobeniusModel& fm, const KottwitzSolution& sol) {
    const auto& model = fm.model();
    const LoopMatrix lhs = norm(fm, sol.delta, sol.l);
    const LoopMatrix rhs = model.mul(model.mul(sol.c, sol.gamma), model.inverse(sol.c));
    return lhs == rhs;
}

}  // namespace hecke
