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

#include "hecke/loop_group.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

bool is_prime_power(long long q, long long& p, int& k) {
    for (long long cand = 2; cand * cand <= q; ++cand) {
        if (q % cand) continue;
        p = cand;
        k = 0;
        long long v = q;
        while (v % cand == 0) {
            v /= cand;
            ++k;
        }
        return v == 1;
    }
    p = q;
    k = 1;
    return q >= 2;
}

}  // namespace

TruncatedLoopGroupModel::TruncatedLoopGroupModel(int group_rank, long long q, int n, int m)
    : r_(group_rank), n_(n), m_(m), q_(q) {
    if (r_ != 2 && r_ != 3) throw std::invalid_argument("model: matrix rank must be 2 or 3");
    if (m_ < 1 || m_ > kMaxTruncation) throw std::invalid_argument("model: truncation out of range");
    if (n_ < 1) throw std::invalid_argument("model: extension degree must be positive");
    long long p = 0;
    int k = 0;
    if (!is_prime_power(q_, p, k)) throw std::invalid_argument("model: q must be a prime power");
    base_degree_ = k;
    field_ = &GaloisField::get(p, k * n_);
}

BigInt TruncatedLoopGroupModel::cardinality() const {
    const BigInt f = field_->size();
    BigInt sl;
    if (r_ == 2)
        sl = f * (f * f - 1);
    else
        sl = f * f * f * (f * f - 1) * (f * f * f - 1);
    const int dim = (r_ == 2) ? 3 : 8;
    BigInt congruence = 1;
    for (int i = 0; i < (m_ - 1) * dim; ++i) congruence *= f;
    return sl * congruence;
}

RingElt TruncatedLoopGroupModel::ring_one() const {
    RingElt x;
    x.c[0] = field_->one();
    return x;
}

RingElt TruncatedLoopGroupModel::ring_add(const RingElt& x, const RingElt& y) const {
    RingElt z;
    for (int i = 0; i < m_; ++i) z.c[i] = field_->add(x.c[i], y.c[i]);
    return z;
}

RingElt TruncatedLoopGroupModel::ring_mul(const RingElt& x, const RingElt& y) const {
    RingElt z;
    for (int i = 0; i < m_; ++i)
        for (int j = 0; i + j < m_; ++j)
            z.c[i + j] = field_->add(z.c[i + j], field_->mul(x.c[i], y.c[j]));
    return z;
}

RingElt TruncatedLoopGroupModel::ring_neg(const RingElt& x) const {
    RingElt z;
    for (int i = 0; i < m_; ++i) z.c[i] = field_->neg(x.c[i]);
    return z;
}

RingElt TruncatedLoopGroupModel::ring_inv(const RingElt& x) const {
    if (!ring_is_unit(x)) throw std::domain_error("ring_inv: not a unit");
    // u = u0 (1 + t w); invert the unit part and expand the geometric series
    RingElt z;
    z.c[0] = field_->inv(x.c[0]);
    for (int iter = 0; iter < m_; ++iter) {
        // Newton step: z <- z (2 - x z)
        RingElt xz = ring_mul(x, z);
        RingElt two_minus;
        two_minus.c[0] = field_->sub(field_->add(field_->one(), field_->one()), xz.c[0]);
        for (int i = 1; i < m_; ++i) two_minus.c[i] = field_->neg(xz.c[i]);
        z = ring_mul(z, two_minus);
    }
    return z;
}

std::vector<RingElt> TruncatedLoopGroupModel::ring_elements() const {
    std::vector<RingElt> out;
    const long long f = field_->size();
    long long total = 1;
    for (int i = 0; i < m_; ++i) total *= f;
    out.reserve(total);
    RingElt cur;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == m_) {
            out.push_back(cur);
            return;
        }
        for (long long v = 0; v < f; ++v) {
            cur.c[pos] = static_cast<GaloisField::Elt>(v);
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

LoopMatrix TruncatedLoopGroupModel::identity() const {
    LoopMatrix x;
    for (int i = 0; i < r_; ++i) at(x, i, i) = ring_one();
    return x;
}

LoopMatrix TruncatedLoopGroupModel::mul(const LoopMatrix& x, const LoopMatrix& y) const {
    LoopMatrix z;
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < r_; ++k) {
            const RingElt& xik = at(x, i, k);
            bool zero = true;
            for (int t = 0; t < m_; ++t)
                if (xik.c[t] != 0) zero = false;
            if (zero) continue;
            for (int j = 0; j < r_; ++j)
                at(z, i, j) = ring_add(at(z, i, j), ring_mul(xik, at(y, k, j)));
        }
    return z;
}

RingElt TruncatedLoopGroupModel::det(const LoopMatrix& x) const {
    if (r_ == 2)
        return ring_add(ring_mul(at(x, 0, 0), at(x, 1, 1)), ring_neg(ring_mul(at(x, 0, 1), at(x, 1, 0))));
    RingElt acc{};
    const int idx[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    for (int s = 0; s < 6; ++s) {
        RingElt term = ring_mul(ring_mul(at(x, 0, idx[s][0]), at(x, 1, idx[s][1])), at(x, 2, idx[s][2]));
        acc = ring_add(acc, s < 3 ? term : ring_neg(term));
    }
    return acc;
}

bool TruncatedLoopGroupModel::is_sl(const LoopMatrix& x) const { return det(x) == ring_one(); }

LoopMatrix TruncatedLoopGroupModel::inverse(const LoopMatrix& x) const {
    const RingElt d = det(x);
    const RingElt dinv = ring_inv(d);
    LoopMatrix adj;
    if (r_ == 2) {
        at(adj, 0, 0) = at(x, 1, 1);
        at(adj, 1, 1) = at(x, 0, 0);
        at(adj, 0, 1) = ring_neg(at(x, 0, 1));
        at(adj, 1, 0) = ring_neg(at(x, 1, 0));
    } else {
        auto cof = [&](int i, int j) {
            int rows[2], cols[2], ri = 0, ci = 0;
            for (int k = 0; k < 3; ++k) {
                if (k != i) rows[ri++] = k;
                if (k != j) cols[ci++] = k;
            }
            RingElt minor = ring_add(ring_mul(at(x, rows[0], cols[0]), at(x, rows[1], cols[1])),
                                     ring_neg(ring_mul(at(x, rows[0], cols[1]), at(x, rows[1], cols[0]))));
            return ((i + j) % 2 == 0) ? minor : ring_neg(minor);
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) at(adj, j, i) = cof(i, j);
    }
    LoopMatrix inv;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) at(inv, i, j) = ring_mul(dinv, at(adj, i, j));
    return inv;
}

LoopMatrix TruncatedLoopGroupModel::frobenius(const LoopMatrix& x, int l) const {
    LoopMatrix z = x;
    long long qe = 1;
    for (int i = 0; i < l; ++i) qe *= q_;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j)
            for (int t = 0; t < m_; ++t) at(z, i, j).c[t] = field_->pow(at(z, i, j).c[t], qe);
    return z;
}

std::vector<LoopMatrix> TruncatedLoopGroupModel::elementary_generators() const {
    std::vector<LoopMatrix> gens;
    // prime-field basis of the ring: b * t^a with b a field basis element
    std::vector<RingElt> basis;
    const long long p = field_->characteristic();
    for (int a = 0; a < m_; ++a) {
        long long b = 1;
        for (int d = 0; d < field_->degree(); ++d) {
            RingElt x;
            x.c[a] = static_cast<GaloisField::Elt>(b);
            basis.push_back(x);
            b *= p;
        }
    }
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) {
            if (i == j) continue;
            for (const RingElt& b : basis) {
                LoopMatrix g = identity();
                at(g, i, j) = b;
                gens.push_back(g);
            }
        }
    return gens;
}

std::vector<LoopMatrix> TruncatedLoopGroupModel::enumerate(std::size_t budget) const {
    const auto gens = elementary_generators();
    std::set<LoopMatrix> seen{identity()};
    std::queue<LoopMatrix> work;
    work.push(identity());
    while (!work.empty()) {
        const LoopMatrix cur = work.front();
        work.pop();
        for (const auto& g : gens) {
            LoopMatrix nxt = mul(g, cur);
            if (seen.contains(nxt)) continue;
            if (seen.size() >= budget)
                throw std::domain_error("loop group enumeration budget exceeded");
            seen.insert(nxt);
            work.push(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

std::string TruncatedLoopGroupModel::str(const LoopMatrix& x) const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < r_; ++j) {
            os << (j ? ", " : "");
            bool printed = false;
            for (int t = 0; t < m_; ++t) {
                const auto c = at(x, i, j).c[t];
                if (c == 0) continue;
                if (printed) os << "+";
                os << static_cast<long long>(c);
                if (t >= 1) os << "t";
                if (t >= 2) os << "^" << t;
                printed = true;
            }
            if (!printed) os << "0";
        }
    }
    os << "]";
    return os.str();
}

std::vector<ConjugateSubgroup> conjugacy_orbit(const TruncatedLoopGroupModel& model,
                                               std::vector<LoopMatrix> subgroup, std::size_t budget) {
    std::sort(subgroup.begin(), subgroup.end());
    const auto gens = model.elementary_generators();
    std::vector<LoopMatrix> gen_invs;
    gen_invs.reserve(gens.size());
    for (const auto& g : gens) gen_invs.push_back(model.inverse(g));

    std::set<std::vector<LoopMatrix>> seen;
    std::vector<ConjugateSubgroup> orbit;
    std::queue<std::size_t> work;
    seen.insert(subgroup);
    orbit.push_back({subgroup, model.identity()});
    work.push(0);
    std::size_t total_elements = subgroup.size();
    while (!work.empty()) {
        const std::size_t idx = work.front();
        work.pop();
        // copy: the orbit vector may reallocate while we append below
        const ConjugateSubgroup cur = orbit[idx];
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            std::vector<LoopMatrix> img;
            img.reserve(cur.elements.size());
            for (const auto& s : cur.elements) img.push_back(model.mul(model.mul(gens[gi], s), gen_invs[gi]));
            std::sort(img.begin(), img.end());
            if (seen.contains(img)) continue;
            total_elements += img.size();
            if (total_elements > budget) throw std::domain_error("conjugacy orbit budget exceeded");
            seen.insert(img);
            orbit.push_back({img, model.mul(gens[gi], cur.transporter)});
            work.push(orbit.size() - 1);
        }
    }
    return orbit;
}

}  // namespace hecke
