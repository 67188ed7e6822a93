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

#include "hecke/mgs.hpp"

#include <algorithm>

namespace hecke {

bool git_semistable_torus(const TorusActionWeights& w) {
    if (w.support.empty()) return false;
    std::vector<std::vector<BigRat>> pts;
    for (std::size_t i : w.support) {
        if (i >= w.weights.size()) throw std::invalid_argument("git_semistable_torus: bad support index");
        std::vector<BigRat> v(w.weights[i].size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = w.weights[i][j];
        pts.push_back(std::move(v));
    }
    return zero_in_hull(pts).inside;
}

ExtendedCharacter::ExtendedCharacter(const MonomialDatumModel& datum, int n)
    : datum_(&datum), model_(datum.base.r(), datum.base.q(), n, datum.base.m()) {
    // multiplicativity check: chi(h1 h2) = chi(h1) chi(h2); exhaustive on
    // small H, sampled on larger ones
    const auto points = datum.h_enumerate(model_);
    const long long p = model_.p();
    auto chi = [&](const LoopMatrix& h) {
        return model_.field().trace_to_prime(datum.linear_form(model_, h));
    };
    const std::size_t cap = points.size() <= 100 ? points.size() : 64;
    for (std::size_t i = 0; i < cap; ++i)
        for (std::size_t j = 0; j < cap; ++j) {
            const std::size_t a = i * (points.size() / cap), b = j * (points.size() / cap);
            const LoopMatrix prod = model_.mul(points[a], points[b]);
            if (!datum.h_member(model_, prod))
                throw std::domain_error("H is not closed under multiplication");
            if ((chi(points[a]) + chi(points[b])) % p != chi(prod))
                throw std::domain_error("linear form is not additive on H");
        }
}

long long ExtendedCharacter::operator()(const LoopMatrix& h) const {
    return model_.field().trace_to_prime(datum_->linear_form(model_, h));
}

std::vector<RadicalClass> standard_parabolics(const TruncatedLoopGroupModel& model) {
    std::vector<RadicalClass> out;
    const auto ring = model.ring_elements();
    if (model.r() == 2) {
        RadicalClass borel{"borel", {}};
        for (const RingElt& x : ring) {
            LoopMatrix u = model.identity();
            model.at(u, 0, 1) = x;
            borel.points.push_back(u);
        }
        out.push_back(std::move(borel));
    } else if (model.r() == 3) {
        RadicalClass p1{"parabolic-(1,2)", {}}, p2{"parabolic-(2,1)", {}}, borel{"borel", {}};
        for (const RingElt& x : ring)
            for (const RingElt& y : ring) {
                LoopMatrix u = model.identity();
                model.at(u, 0, 1) = x;
                model.at(u, 0, 2) = y;
                p1.points.push_back(u);
                LoopMatrix v = model.identity();
                model.at(v, 0, 2) = x;
                model.at(v, 1, 2) = y;
                p2.points.push_back(v);
                for (const RingElt& z : ring) {
                    LoopMatrix w = model.identity();
                    model.at(w, 0, 1) = x;
                    model.at(w, 1, 2) = y;
                    model.at(w, 0, 2) = z;
                    borel.points.push_back(w);
                }
            }
        out.push_back(std::move(p1));
        out.push_back(std::move(p2));
        out.push_back(std::move(borel));
    } else {
        throw std::invalid_argument("standard_parabolics: unsupported group");
    }
    return out;
}

MgsVerdict check_geometric_supercuspidality(const MonomialDatumModel& datum, int n_max,
                                            std::size_t budget) {
    MgsVerdict verdict;
    verdict.overall_pass = true;
    for (int n = 1; n <= n_max; ++n) {
        MgsLevelVerdict lv;
        lv.n = n;
        lv.pass = true;
        const ExtendedCharacter chi(datum, n);
        const TruncatedLoopGroupModel& model = chi.model();
        const long long p = model.p();
        for (const RadicalClass& rad : standard_parabolics(model)) {
            std::vector<ConjugateSubgroup> orbit;
            try {
                orbit = conjugacy_orbit(model, rad.points, budget);
            } catch (const std::domain_error&) {
                lv.complete = false;
                verdict.complete = false;
                continue;
            }
            for (const ConjugateSubgroup& cs : orbit) {
                ++lv.subgroups_checked;
                std::size_t inter = 0;
                bool nontrivial = false;
                for (const LoopMatrix& h : cs.elements) {
                    if (!datum.h_member(model, h)) continue;
                    ++inter;
                    if (chi(h) != 0) nontrivial = true;
                }
                // p-group sanity on the intersection; anything else is
                // reported, not fatal
                std::size_t q = inter;
                while (q > 1 && q % p == 0) q /= p;
                if (q != 1) lv.disconnected_intersection_flag = true;
                if (!nontrivial) {
                    lv.pass = false;
                    if (!lv.witness) {
                        MgsWitness w;
                        w.radical = rad.tag;
                        w.transporter = cs.transporter;
                        w.intersection_size = inter;
                        lv.witness = std::move(w);
                    }
                }
            }
            if (!lv.pass) break;
        }
        verdict.overall_pass = verdict.overall_pass && lv.pass;
        verdict.levels.push_back(std::move(lv));
    }
    return verdict;
}

MonomialDatumModel epipelagic_sl2_datum(long long q, bool support_topright, bool support_bottomleft) {
    if (q % 2 == 0 || q > 9) throw std::invalid_argument("epipelagic datum needs odd q <= 9");
    MonomialDatumModel d{
        TruncatedLoopGroupModel(2, q, 1, 2),
        "epipelagic-sl2",
        std::string("support:") + (support_topright ? "tr" : "") + (support_bottomleft ? "bl" : ""),
        {},
        {},
        {},
        {},
    };
    d.h_member = [](const TruncatedLoopGroupModel& model, const LoopMatrix& x) {
        return model.at(x, 0, 0).c[0] == model.field().one() &&
               model.at(x, 1, 1).c[0] == model.field().one() && model.at(x, 1, 0).c[0] == 0 &&
               model.is_sl(x);
    };
    d.linear_form = [support_topright, support_bottomleft](const TruncatedLoopGroupModel& model,
                                                           const LoopMatrix& x) {
        GaloisField::Elt acc = 0;
        if (support_topright) acc = model.field().add(acc, model.at(x, 0, 1).c[0]);
        if (support_bottomleft) acc = model.field().add(acc, model.at(x, 1, 0).c[1]);
        return acc;
    };
    d.h_enumerate = [](const TruncatedLoopGroupModel& model) {
        // [[1 + a t, b + c t], [d t, 1 + e t]] with e = b d - a forced by det
        const GaloisField& f = model.field();
        std::vector<LoopMatrix> out;
        for (long long a = 0; a < f.size(); ++a)
            for (long long b = 0; b < f.size(); ++b)
                for (long long c = 0; c < f.size(); ++c)
                    for (long long dd = 0; dd < f.size(); ++dd) {
                        LoopMatrix x = model.identity();
                        model.at(x, 0, 0).c[1] = static_cast<GaloisField::Elt>(a);
                        model.at(x, 0, 1).c[0] = static_cast<GaloisField::Elt>(b);
                        model.at(x, 0, 1).c[1] = static_cast<GaloisField::Elt>(c);
                        model.at(x, 1, 0).c[1] = static_cast<GaloisField::Elt>(dd);
                        model.at(x, 1, 1).c[1] =
                            f.sub(f.mul(static_cast<GaloisField::Elt>(b), static_cast<GaloisField::Elt>(dd)),
                                  static_cast<GaloisField::Elt>(a));
                        out.push_back(x);
                    }
        return out;
    };
    TorusActionWeights torus;
    torus.weights = {Coord{2}, Coord{-2}};
    if (support_topright) torus.support.push_back(0);
    if (support_bottomleft) torus.support.push_back(1);
    d.torus = std::move(torus);
    return d;
}

MonomialDatumModel cartan_trace_datum(long long q, bool split) {
    if (q % 2 == 0) throw std::invalid_argument("cartan datum needs odd q");
    // B with prime-field entries embeds consistently into every extension;
    // prime q keeps the base field prime.
    bool prime = q >= 2;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) prime = false;
    if (!prime) throw std::invalid_argument("cartan datum implemented for odd prime q");

    // nonsplit: companion matrix of an irreducible monic quadratic x^2+bx+c;
    // split: a regular semisimple diagonal element
    long long b0 = 0, c0 = 0;
    if (!split) {
        bool found = false;
        for (long long b = 0; b < q && !found; ++b)
            for (long long c = 0; c < q && !found; ++c) {
                bool has_root = false;
                for (long long x = 0; x < q; ++x)
                    if ((x * x + b * x + c) % q == 0) has_root = true;
                if (!has_root) {
                    b0 = b;
                    c0 = c;
                    found = true;
                }
            }
        if (!found) throw std::logic_error("no irreducible quadratic found");
    }

    MonomialDatumModel d{
        TruncatedLoopGroupModel(2, q, 1, 2),
        "congruence-kernel-sl2",
        split ? "trace-split-cartan" : "trace-nonsplit-cartan",
        {},
        {},
        {},
        {},
    };
    d.h_member = [](const TruncatedLoopGroupModel& model, const LoopMatrix& x) {
        return model.at(x, 0, 0).c[0] == model.field().one() &&
               model.at(x, 1, 1).c[0] == model.field().one() && model.at(x, 0, 1).c[0] == 0 &&
               model.at(x, 1, 0).c[0] == 0 && model.is_sl(x);
    };
    d.linear_form = [split, b0, c0](const TruncatedLoopGroupModel& model, const LoopMatrix& x) {
        const GaloisField& f = model.field();
        // X = t-coefficient matrix of x; the form is tr(X B)
        const GaloisField::Elt x00 = model.at(x, 0, 0).c[1];
        const GaloisField::Elt x01 = model.at(x, 0, 1).c[1];
        const GaloisField::Elt x10 = model.at(x, 1, 0).c[1];
        const GaloisField::Elt x11 = model.at(x, 1, 1).c[1];
        GaloisField::Elt b00, b01, b10, b11;
        if (split) {
            // B = diag(1, -1)
            b00 = f.one();
            b01 = 0;
            b10 = 0;
            b11 = f.neg(f.one());
        } else {
            // companion of x^2 + b0 x + c0
            b00 = 0;
            b01 = f.neg(f.from_int(c0));
            b10 = f.one();
            b11 = f.neg(f.from_int(b0));
        }
        // tr(X B) = X00 B00 + X01 B10 + X10 B01 + X11 B11
        GaloisField::Elt acc = f.mul(x00, b00);
        acc = f.add(acc, f.mul(x01, b10));
        acc = f.add(acc, f.mul(x10, b01));
        acc = f.add(acc, f.mul(x11, b11));
        return acc;
    };
    d.h_enumerate = [](const TruncatedLoopGroupModel& model) {
        // 1 + t X with tr X = 0 (forced by the determinant)
        const GaloisField& f = model.field();
        std::vector<LoopMatrix> out;
        for (long long a = 0; a < f.size(); ++a)
            for (long long b = 0; b < f.size(); ++b)
                for (long long c = 0; c < f.size(); ++c) {
                    LoopMatrix x = model.identity();
                    model.at(x, 0, 0).c[1] = static_cast<GaloisField::Elt>(a);
                    model.at(x, 0, 1).c[1] = static_cast<GaloisField::Elt>(b);
                    model.at(x, 1, 0).c[1] = static_cast<GaloisField::Elt>(c);
                    model.at(x, 1, 1).c[1] = f.neg(static_cast<GaloisField::Elt>(a));
                    out.push_back(x);
                }
        return out;
    };
    return d;
}

}  // namespace hecke
