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

#include "hecke/weight_polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hecke/linprog.hpp"

namespace hecke {

std::vector<Weight> rep_support(const RootDatum& datum, const RepSum& v) {
    std::set<Weight> s;
    for (const Weight& hw : v.summands)
        for (const auto& [w, m] : weight_multiplicities(datum, hw).mult) s.insert(w);
    return {s.begin(), s.end()};
}

namespace {

// Is subset S (as indices into pts) the exact set of maximizers of some
// functional? If so, produce the functional. Linear algebra over Q: quotient
// out the span of differences within S, then strictly separate the projected
// complement from the origin.
struct FaceProbe {
    bool is_face = false;
    std::vector<BigRat> functional;  // on fundamental-weight coordinates
};

FaceProbe probe_face(const std::vector<Weight>& pts, const std::vector<std::size_t>& subset,
                     const std::vector<std::size_t>& complement) {
    FaceProbe out;
    const std::size_t d = pts[0].rank();
    const Weight& base = pts[subset[0]];

    // Row-reduce the in-face differences to get the quotient projection.
    std::vector<std::vector<BigRat>> rows;
    for (std::size_t k = 1; k < subset.size(); ++k) {
        std::vector<BigRat> r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = pts[subset[k]].fund[j] - base.fund[j];
        for (const auto& prev : rows) {
            // eliminate with earlier pivots
            std::size_t pc = 0;
            while (pc < d && prev[pc] == 0) ++pc;
            if (pc < d && r[pc] != 0) {
                const BigRat f = r[pc] / prev[pc];
                for (std::size_t j = 0; j < d; ++j) r[j] -= f * prev[j];
            }
        }
        if (std::any_of(r.begin(), r.end(), [](const BigRat& x) { return x != 0; })) rows.push_back(r);
    }
    // normalize staircase order
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        std::size_t pa = 0, pb = 0;
        while (pa < d && a[pa] == 0) ++pa;
        while (pb < d && b[pb] == 0) ++pb;
        return pa < pb;
    });
    std::vector<std::size_t> pivots;
    for (const auto& r : rows) {
        std::size_t p = 0;
        while (p < d && r[p] == 0) ++p;
        pivots.push_back(p);
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < d; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_cols.push_back(j);

    auto project = [&](std::vector<BigRat> x) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const std::size_t p = pivots[k];
            if (x[p] != 0) {
                const BigRat f = x[p] / rows[k][p];
                for (std::size_t j = 0; j < d; ++j) x[j] -= f * rows[k][j];
            }
        }
        std::vector<BigRat> q(free_cols.size());
        for (std::size_t j = 0; j < free_cols.size(); ++j) q[j] = x[free_cols[j]];
        return q;
    };

    std::vector<std::vector<BigRat>> projected;
    projected.reserve(complement.size());
    for (std::size_t ci : complement) {
        std::vector<BigRat> diff(d);
        for (std::size_t j = 0; j < d; ++j) diff[j] = pts[ci].fund[j] - base.fund[j];
        projected.push_back(project(std::move(diff)));
    }

    const HullResult hull = zero_in_hull(projected);
    if (hull.inside) return out;

    // Pull the separator back: f(x) = sep . project(x).
    out.is_face = true;
    out.functional.assign(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<BigRat> e(d, 0);
        e[j] = 1;
        const auto q = project(std::move(e));
        BigRat val = 0;
        for (std::size_t k = 0; k < q.size(); ++k) val += hull.separator[k] * q[k];
        out.functional[j] = val;
    }
    return out;
}

// The separator is strictly smaller on the complement, i.e. already maximized
// on the face; convert to a primitive integral coweight (values on simple
// roots).
Coweight functional_to_coweight(const RootDatum& datum, const std::vector<BigRat>& f) {
    const std::size_t d = datum.rank();
    BigInt lcm = 1;
    for (const auto& x : f) {
        const BigInt den = rat_den(x);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<BigInt> scaled(d);
    for (std::size_t j = 0; j < d; ++j) scaled[j] = to_integer(f[j] * BigRat(lcm));
    Coweight c(Coord(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        BigInt v = 0;
        for (std::size_t j = 0; j < d; ++j) v += datum.cartan(i, j) * scaled[j];
        c.fund[i] = to_i64(v);
    }
    BigInt g = 0;
    for (long long x : c.fund) g = boost::multiprecision::gcd(g, BigInt(x < 0 ? -x : x));
    if (g > 1)
        for (auto& x : c.fund) x /= to_i64(g);
    return c;
}

}  // namespace

std::vector<Face> weight_polytope_faces(const RootDatum& datum, const RepSum& v, bool up_to_weyl) {
    if (v.empty()) throw std::invalid_argument("weight_polytope_faces: empty representation");
    const std::vector<Weight> pts = rep_support(datum, v);
    if (pts.size() <= 1)
        throw std::domain_error("weight_polytope_faces: zero-dimensional weight support");
    if (pts.size() > 20)
        throw std::domain_error("weight_polytope_faces: support of size " + std::to_string(pts.size()) +
                                " exceeds the 2^n subset enumeration guard (20)");

    const std::size_t n = pts.size();
    std::vector<Face> faces;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<std::size_t> subset, complement;
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1u ? subset : complement).push_back(i);
        const FaceProbe probe = probe_face(pts, subset, complement);
        if (!probe.is_face) continue;
        Face f;
        f.normal = functional_to_coweight(datum, probe.functional);
        for (std::size_t i : subset) f.face_weights.push_back(pts[i]);
        for (std::size_t i : complement) f.complement_weights.push_back(pts[i]);
        faces.push_back(std::move(f));
    }

    if (up_to_weyl) {
        const auto group = full_weyl_group(datum);
        std::set<std::vector<Weight>> keep;
        std::vector<Face> reduced;
        for (const Face& f : faces) {
            // canonical orbit representative: lexicographically smallest
            // sorted image of the weight subset
            std::vector<Weight> best = f.face_weights;
            for (const auto& g : group) {
                std::vector<Weight> img;
                img.reserve(f.face_weights.size());
                for (const Weight& w : f.face_weights) img.push_back(act(g, w));
                std::sort(img.begin(), img.end());
                if (img < best) best = img;
            }
            if (best == f.face_weights && keep.insert(best).second) reduced.push_back(f);
        }
        return reduced;
    }
    return faces;
}

namespace {

std::vector<Weight> all_roots(const RootDatum& datum) {
    std::vector<Weight> roots;
    for (const auto& pr : datum.positive_roots()) {
        roots.push_back(pr.weight);
        roots.push_back(-pr.weight);
    }
    return roots;
}

// Roots whose raising operator preserves the span of the complement weights:
// beta stabilizes iff no complement weight lands in the face under + beta.
std::vector<Weight> stabilizing_roots(const RootDatum& datum, const Face& face) {
    std::set<Weight> in_face(face.face_weights.begin(), face.face_weights.end());
    std::vector<Weight> out;
    for (const Weight& beta : all_roots(datum)) {
        bool ok = true;
        for (const Weight& mu : face.complement_weights)
            if (in_face.contains(mu + beta)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(beta);
    }
    return out;
}

}  // namespace

ParabolicDescriptor face_parabolic(const RootDatum& datum, const RepSum& v, const Face& face) {
    (void)v;
    const std::vector<Weight> stab = stabilizing_roots(datum, face);
    const std::set<Weight> stab_set(stab.begin(), stab.end());

    // Abstract parabolicity: closed under addition, and together with its
    // negatives covers all roots.
    const auto roots = all_roots(datum);
    const std::set<Weight> root_set(roots.begin(), roots.end());
    for (const Weight& a : stab)
        for (const Weight& b : stab) {
            const Weight s = a + b;
            if (root_set.contains(s) && !stab_set.contains(s))
                throw std::domain_error("face stabilizer not closed under addition");
        }
    for (const Weight& r : roots)
        if (!stab_set.contains(r) && !stab_set.contains(-r))
            throw std::domain_error("face stabilizer misses a root pair");

    // A cocharacter in the interior of the stabilizer's chamber: the sum of
    // coroots over the unipotent part (roots of P whose negative is not in P).
    // It is zero on the Levi, positive on the unipotent part, negative outside.
    Coweight mu(Coord(datum.rank(), 0));
    for (std::size_t ri = 0; ri < datum.positive_roots().size(); ++ri) {
        const Weight& beta = datum.positive_roots()[ri].weight;
        const Coweight& betav = datum.positive_coroots()[ri].coweight;
        int dir = 0;
        if (stab_set.contains(beta) && !stab_set.contains(-beta)) dir = 1;
        if (!stab_set.contains(beta) && stab_set.contains(-beta)) dir = -1;
        for (std::size_t k = 0; k < datum.rank(); ++k) mu.fund[k] += dir * betav.fund[k];
    }
    for (const Weight& r : roots) {
        const BigRat p = pairing(datum, r, mu);
        if (stab_set.contains(r) ? (p < 0) : (p >= 0))
            throw std::domain_error("face stabilizer is not the chamber of its cocharacter");
    }

    const CoweightDominantRep dr = dominant_representative(datum, mu);
    ParabolicDescriptor pd;
    pd.dominant_cochar = dr.coweight;
    IntMatrix w = int_identity(datum.rank());
    for (std::size_t i : dr.word) w = int_mul(w, datum.simple_reflection(i));
    pd.chamber = WeylElement{w};
    for (std::size_t i = 0; i < datum.rank(); ++i)
        if (dr.coweight.fund[i] == 0) pd.levi_simple_roots.push_back(i);
    return pd;
}

bool check_levi_action(const RootDatum& datum, const RepSum& v, const Face& face) {
    (void)v;
    const std::vector<Weight> stab = stabilizing_roots(datum, face);
    const std::set<Weight> stab_set(stab.begin(), stab.end());
    const std::set<Weight> in_face(face.face_weights.begin(), face.face_weights.end());
    for (const Weight& beta : all_roots(datum)) {
        bool connects = false;
        for (const Weight& mu : face.face_weights)
            if (in_face.contains(mu + beta)) {
                connects = true;
                break;
            }
        if (connects && !stab_set.contains(-beta)) return false;
    }
    return true;
}

std::vector<Weight> parabolic_roots(const RootDatum& datum, const ParabolicDescriptor& pd) {
    // standard parabolic roots (positives plus the Levi span), mapped through
    // the chamber
    std::vector<Weight> out;
    const WeylElement& w = pd.chamber;
    for (const auto& pr : datum.positive_roots()) {
        out.push_back(act(w, pr.weight));
        Coord rc;
        if (!datum.root_lattice_coords(pr.weight, rc)) throw std::logic_error("root off lattice");
        bool levi = true;
        for (std::size_t i = 0; i < datum.rank(); ++i)
            if (rc[i] != 0 &&
                std::find(pd.levi_simple_roots.begin(), pd.levi_simple_roots.end(), i) == pd.levi_simple_roots.end())
                levi = false;
        if (levi) out.push_back(act(w, -pr.weight));
    }
    return out;
}

Coweight cocharacter_for_parabolic(const RootDatum& datum, const ParabolicDescriptor& pd) {
    Coweight c(Coord(datum.rank(), 0));
    for (std::size_t i = 0; i < datum.rank(); ++i)
        if (std::find(pd.levi_simple_roots.begin(), pd.levi_simple_roots.end(), i) == pd.levi_simple_roots.end())
            c.fund[i] = 1;
    return act_on_coweight(datum, pd.chamber, c);
}

std::string levi_type_string(const RootDatum& datum, const ParabolicDescriptor& pd) {
    const auto& levi = pd.levi_simple_roots;
    if (levi.empty()) return "T";
    // connected components of the induced Dynkin subdiagram
    std::vector<bool> used(levi.size(), false);
    std::vector<std::string> parts;
    for (std::size_t s = 0; s < levi.size(); ++s) {
        if (used[s]) continue;
        std::vector<std::size_t> comp{levi[s]};
        used[s] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t t = 0; t < levi.size(); ++t) {
                if (used[t]) continue;
                for (std::size_t c : comp)
                    if (datum.cartan(c, levi[t]) != 0) {
                        comp.push_back(levi[t]);
                        used[t] = true;
                        grew = true;
                        break;
                    }
            }
        }
        // classify by edge multiplicities and branch shape (enough at rank <= 8)
        int triple = 0, dbl = 0, branch = 0;
        for (std::size_t a : comp)
            for (std::size_t b : comp) {
                if (a == b) continue;
                const long long m = datum.cartan(a, b) * datum.cartan(b, a);
                if (m == 3) ++triple;
                if (m == 2) ++dbl;
            }
        for (std::size_t a : comp) {
            int deg = 0;
            for (std::size_t b : comp)
                if (a != b && datum.cartan(a, b) != 0) ++deg;
            if (deg >= 3) ++branch;
        }
        char fam = 'A';
        if (triple > 0) {
            fam = 'G';
        } else if (dbl > 0) {
            if (comp.size() == 2) {
                fam = 'B';  // B2 = C2
            } else if (comp.size() == 4 && dbl == 2) {
                // the doubled edge sits in the middle: F4; at an end: B4/C4
                fam = 'F';
                for (std::size_t a : comp) {
                    int deg = 0;
                    bool on_double = false;
                    for (std::size_t b : comp) {
                        if (a == b || datum.cartan(a, b) == 0) continue;
                        ++deg;
                        if (datum.cartan(a, b) * datum.cartan(b, a) == 2) on_double = true;
                    }
                    if (on_double && deg == 1) fam = 'X';  // double edge at an end
                }
                if (fam == 'X') fam = 'B';
            } else {
                fam = 'B';
            }
            if (fam == 'B' && comp.size() > 2) {
                // B has a single short simple root, C a single long one
                BigRat dmin = datum.symmetrizers()[comp[0]];
                for (std::size_t a : comp) dmin = std::min(dmin, datum.symmetrizers()[a]);
                int n_short = 0;
                for (std::size_t a : comp)
                    if (datum.symmetrizers()[a] == dmin) ++n_short;
                fam = (n_short == 1) ? 'B' : 'C';
            }
        } else if (branch > 0) {
            // D when the branch node touches two leaves, E otherwise
            fam = 'E';
            for (std::size_t a : comp) {
                int deg = 0;
                for (std::size_t b : comp)
                    if (a != b && datum.cartan(a, b) != 0) ++deg;
                if (deg >= 3) {
                    int leaves = 0;
                    for (std::size_t b : comp) {
                        if (a == b || datum.cartan(a, b) == 0) continue;
                        int degb = 0;
                        for (std::size_t c : comp)
                            if (c != b && datum.cartan(b, c) != 0) ++degb;
                        if (degb == 1) ++leaves;
                    }
                    if (leaves >= 2) fam = 'D';
                }
            }
        }
        parts.push_back(std::string(1, fam) + std::to_string(comp.size()));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "x";
        out += parts[i];
    }
    return out;
}

}  // namespace hecke
