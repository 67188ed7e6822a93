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

#include "hecke/reps.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace hecke {

BigInt HighestWeightRep::dim() const {
    BigInt d = 0;
    for (const auto& [w, m] : mult) d += m;
    return d;
}

std::vector<Weight> HighestWeightRep::support() const {
    std::vector<Weight> s;
    s.reserve(mult.size());
    for (const auto& [w, m] : mult) s.push_back(w);
    return s;
}

BigInt weyl_dim(const RootDatum& datum, const Weight& lambda) {
    if (!is_dominant(datum, lambda)) throw std::invalid_argument("weyl_dim: weight not dominant");
    const Weight lr = lambda + rho(datum);
    const Weight r = rho(datum);
    BigRat prod = 1;
    for (const auto& cr : datum.positive_coroots()) {
        prod *= pairing(datum, lr, cr.coweight) / pairing(datum, r, cr.coweight);
    }
    return to_integer(prod, "Weyl dimension");
}

namespace {

// Is mu below lambda in dominance order (lambda - mu a nonnegative integral
// combination of simple roots)?
bool dominance_leq(const RootDatum& datum, const Weight& mu, const Weight& lambda) {
    Coord rc;
    if (!datum.root_lattice_coords(lambda - mu, rc)) return false;
    return std::all_of(rc.begin(), rc.end(), [](long long x) { return x >= 0; });
}

}  // namespace

HighestWeightRep weight_multiplicities(const RootDatum& datum, const Weight& lambda) {
    if (!is_dominant(datum, lambda)) throw std::invalid_argument("weight_multiplicities: weight not dominant");

    // The support is connected under simple-root steps, so a breadth-first
    // walk staying below lambda (after dominization) enumerates it.
    std::set<Weight> support{lambda};
    std::queue<Weight> work;
    work.push(lambda);
    while (!work.empty()) {
        const Weight cur = work.front();
        work.pop();
        for (std::size_t i = 0; i < datum.rank(); ++i) {
            const Weight nxt = cur - datum.simple_root(i);
            if (support.contains(nxt)) continue;
            const Weight dom = dominant_representative(datum, nxt).weight;
            if (!dominance_leq(datum, dom, lambda)) continue;
            support.insert(nxt);
            work.push(nxt);
        }
    }

    // Freudenthal, by increasing depth below lambda.
    std::vector<std::pair<long long, Weight>> by_depth;
    by_depth.reserve(support.size());
    for (const Weight& w : support) {
        Coord rc;
        if (!datum.root_lattice_coords(lambda - w, rc)) throw std::logic_error("support off lattice");
        long long h = 0;
        for (long long x : rc) h += x;
        by_depth.emplace_back(h, w);
    }
    std::sort(by_depth.begin(), by_depth.end());
    std::vector<Weight> order;
    order.reserve(by_depth.size());
    for (auto& [h, w] : by_depth) order.push_back(w);

    const Weight r = rho(datum);
    const BigRat top_norm = datum.form(lambda + r, lambda + r);
    std::map<Weight, BigRat> m;
    for (const Weight& mu : order) {
        if (mu == lambda) {
            m[mu] = 1;
            continue;
        }
        const BigRat denom = top_norm - datum.form(mu + r, mu + r);
        if (denom == 0) throw std::logic_error("Freudenthal denominator vanished");
        BigRat acc = 0;
        for (const auto& pr : datum.positive_roots()) {
            for (long long k = 1;; ++k) {
                Weight shifted = mu + pr.weight.scaled(k);
                auto it = m.find(shifted);
                if (!support.contains(shifted)) break;
                if (it == m.end()) throw std::logic_error("Freudenthal order violated");
                acc += it->second * datum.form(shifted, pr.weight);
            }
        }
        m[mu] = 2 * acc / denom;
    }

    HighestWeightRep rep;
    rep.type = datum.type();
    rep.highest = lambda;
    for (const auto& [w, v] : m) {
        const BigInt mi = to_integer(v, "weight multiplicity");
        if (mi < 0) throw std::logic_error("negative weight multiplicity");
        if (mi > 0) rep.mult[w] = mi;
    }
    return rep;
}

std::map<Weight, BigInt> tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
    if (!is_dominant(datum, lambda) || !is_dominant(datum, mu))
        throw std::invalid_argument("tensor_decompose: weights must be dominant");
    const HighestWeightRep vmu = weight_multiplicities(datum, mu);
    const Weight r = rho(datum);
    std::map<Weight, BigInt> out;
    for (const auto& [nu, m] : vmu.mult) {
        Weight x = lambda + nu + r;
        const DominantRep dr = dominant_representative(datum, x);
        if (std::any_of(dr.weight.fund.begin(), dr.weight.fund.end(), [](long long v) { return v == 0; }))
            continue;  // on a wall: contribution cancels
        const int sign = (dr.word.size() % 2 == 0) ? 1 : -1;
        const Weight result = dr.weight - r;
        out[result] += sign * m;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else if (it->second < 0)
            throw std::logic_error("negative tensor multiplicity");
        else
            ++it;
    }
    return out;
}

std::vector<Weight> minuscule_representations(const RootDatum& datum) {
    // A fundamental weight is minuscule iff its orbit size equals the Weyl
    // dimension (extreme weights always have multiplicity one, and the orbit
    // is contained in the support).
    std::vector<Weight> out;
    for (std::size_t i = 0; i < datum.rank(); ++i) {
        Weight w(Coord(datum.rank(), 0));
        w.fund[i] = 1;
        const auto orbit = weyl_orbit(datum, w);
        if (BigInt(orbit.size()) == weyl_dim(datum, w)) out.push_back(w);
    }
    return out;
}

BigInt max_coroot_pairing(const RootDatum& datum, const RepSum& v) {
    BigInt best = 0;
    std::set<Weight> seen;
    for (const Weight& hw : v.summands) {
        const auto rep = weight_multiplicities(datum, hw);
        for (const auto& [mu, m] : rep.mult) {
            if (!seen.insert(mu).second) continue;
            for (const auto& cr : datum.positive_coroots()) {
                BigInt p = pairing_int(datum, mu, cr.coweight);
                if (p < 0) p = -p;
                best = std::max(best, p);
            }
        }
    }
    return best;
}

Weight adjoint_weight(const RootDatum& datum) { return datum.highest_root(); }

CentralClasses central_classes(const RootDatum& datum) {
    // Classes of Lambda_weight / Lambda_root, generated by the fundamental
    // weights. Equality of classes is an integrality test against the Cartan
    // matrix, so no Smith form is needed at these ranks.
    CentralClasses cc;
    cc.reps.push_back(Weight(Coord(datum.rank(), 0)));
    auto same_class = [&](const Weight& a, const Weight& b) {
        Coord rc;
        return datum.root_lattice_coords(a - b, rc);
    };
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < datum.rank() && !grew; ++i) {
            Weight om(Coord(datum.rank(), 0));
            om.fund[i] = 1;
            for (const Weight& repw : cc.reps) {
                const Weight cand = repw + om;
                const bool known = std::any_of(cc.reps.begin(), cc.reps.end(),
                                               [&](const Weight& x) { return same_class(x, cand); });
                if (!known) {
                    cc.reps.push_back(cand);
                    grew = true;
                    break;
                }
            }
        }
    }
    return cc;
}

std::size_t central_class_of(const RootDatum& datum, const CentralClasses& classes, const Weight& w) {
    for (std::size_t i = 0; i < classes.reps.size(); ++i) {
        Coord rc;
        if (datum.root_lattice_coords(w - classes.reps[i], rc)) return i;
    }
    throw std::logic_error("weight not matched to a central class");
}

bool weights_span(const RootDatum& datum, const RepSum& v) {
    std::set<Weight> pts;
    for (const Weight& hw : v.summands)
        for (const auto& [mu, m] : weight_multiplicities(datum, hw).mult) pts.insert(mu);
    RatMatrix m(pts.size(), datum.rank());
    std::size_t r = 0;
    for (const Weight& w : pts) {
        for (std::size_t j = 0; j < datum.rank(); ++j) m(r, j) = w.fund[j];
        ++r;
    }
    return m.rank() == datum.rank();
}

FaithfulRepResult faithful_low_pairing_rep(const RootDatum& datum, long long p) {
    auto is_prime = [](long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    if (!is_prime(p)) throw std::invalid_argument("faithful_low_pairing_rep: p must be prime");

    FaithfulRepResult res;
    const auto classes = central_classes(datum);
    res.center_nontrivial = classes.size() > 1;
    const auto minuscules = minuscule_representations(datum);

    if (p == 2) {
        if (!res.center_nontrivial) {
            res.ok = false;
            res.reason = "p=2 requires every simple factor to have nontrivial center; " +
                         datum.type().str() + " is centerless";
            return res;
        }
        res.rep.summands = minuscules;
    } else {
        // Trivial central character: adjoint, except G2 where the adjoint has
        // a pairing of 3 and the 7-dimensional fundamental works instead.
        if (datum.type().family == 'G')
            res.rep.summands.push_back(Weight(Coord{1, 0}));
        else
            res.rep.summands.push_back(adjoint_weight(datum));
        // One minuscule per nontrivial central character.
        std::vector<bool> covered(classes.size(), false);
        covered[0] = true;
        for (const Weight& mw : minuscules) {
            const std::size_t c = central_class_of(datum, classes, mw);
            if (!covered[c]) {
                covered[c] = true;
                res.rep.summands.push_back(mw);
            }
        }
        if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
            res.ok = false;
            res.reason = "no minuscule representative for some central character";
            return res;
        }
    }

    res.max_pairing = max_coroot_pairing(datum, res.rep);
    if (res.max_pairing > 2) throw std::logic_error("faithful rep exceeded pairing bound 2");
    res.ok = true;
    return res;
}

BigInt brace_w(const RootDatum& datum, const RepSum& v, const Coweight& lambda) {
    if (!is_dominant(datum, lambda)) throw std::invalid_argument("brace_w: coweight must be dominant");
    if (v.empty()) throw std::invalid_argument("brace_w: empty representation");
    if (lambda.is_zero()) return 0;
    BigRat best;
    bool first = true;
    for (const Weight& hw : v.summands) {
        for (const auto& [mu, m] : weight_multiplicities(datum, hw).mult) {
            const BigRat val = -pairing(datum, mu, lambda);
            if (first || val > best) {
                best = val;
                first = false;
            }
        }
    }
    return to_integer(best, "cocharacter weight");
}

std::vector<Weight> dominant_weights_up_to_dim(const RootDatum& datum, const BigInt& max_dim) {
    // weyl_dim is strictly monotone in every coordinate, so a breadth-first
    // walk from 0 with the dimension cutoff is exhaustive.
    std::vector<Weight> out;
    std::set<Weight> seen;
    std::queue<Weight> q;
    const Weight zero(Coord(datum.rank(), 0));
    q.push(zero);
    seen.insert(zero);
    while (!q.empty()) {
        Weight w = q.front();
        q.pop();
        if (weyl_dim(datum, w) > max_dim) continue;
        out.push_back(w);
        for (std::size_t i = 0; i < datum.rank(); ++i) {
            Weight nxt = w;
            ++nxt.fund[i];
            if (seen.insert(nxt).second) q.push(nxt);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        const BigInt da = weyl_dim(datum, a), db = weyl_dim(datum, b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

}  // namespace hecke
