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

#include "hecke/finite_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hecke {

namespace {

// The addition table is quadratic in the field size; 4096 covers every model
// the brute-force checks enumerate (extension fields up to GF(3^6)).
constexpr long long kMaxSize = 1 << 12;

// dense polynomial arithmetic over F_p for field construction only
using Poly = std::vector<long long>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, long long p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    const std::size_t e = mod.size() - 1;
    for (std::size_t k = r.size(); k-- > e;) {
        const long long c = r[k];
        if (c == 0) continue;
        r[k] = 0;
        for (std::size_t i = 0; i < e; ++i) r[k - e + i] = ((r[k - e + i] - c * mod[i]) % p + p) % p;
    }
    r.resize(e);
    return r;
}

bool is_irreducible(const Poly& f, long long p) {
    // brute force: no roots and no factor found by trial division over F_p,
    // fine for the tiny degrees used here (e <= 6)
    const std::size_t e = f.size() - 1;
    if (e == 1) return true;
    // enumerate monic candidate divisors of degree up to e/2
    std::vector<Poly> candidates;
    for (std::size_t d = 1; d <= e / 2; ++d) {
        long long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            long long c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            // trial division f mod g
            Poly r = f;
            for (std::size_t k = r.size(); k-- > d;) {
                const long long lead = r[k];
                if (lead == 0) continue;
                r[k] = 0;
                for (std::size_t i = 0; i < d; ++i)
                    r[k - d + i] = ((r[k - d + i] - lead * g[i]) % p + p) % p;
            }
            bool zero = true;
            for (std::size_t i = 0; i < d; ++i)
                if (r[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

GaloisField::GaloisField(long long p, int e) : p_(p), e_(e) {
    size_ = 1;
    for (int i = 0; i < e; ++i) size_ *= p;
    if (size_ > kMaxSize) throw std::invalid_argument("GaloisField: size cap exceeded");

    // first monic irreducible of degree e in lexicographic order
    Poly mod(e + 1, 0);
    mod[e] = 1;
    if (e == 1) {
        mod[0] = 0;
    } else {
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        bool found = false;
        for (long long code = 1; code < count && !found; ++code) {
            long long c = code;
            for (int i = 0; i < e; ++i) {
                mod[i] = c % p;
                c /= p;
            }
            if (is_irreducible(mod, p)) found = true;
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }
    modulus_.assign(mod.begin(), mod.end());

    auto encode = [&](const Poly& f) {
        long long idx = 0, mul = 1;
        for (int i = 0; i < e; ++i) {
            idx += f[i] * mul;
            mul *= p;
        }
        return static_cast<Elt>(idx);
    };
    auto decode = [&](Elt a) {
        Poly f(e, 0);
        long long v = a;
        for (int i = 0; i < e; ++i) {
            f[i] = v % p;
            v /= p;
        }
        return f;
    };

    add_.resize(static_cast<std::size_t>(size_) * size_);
    neg_.resize(size_);
    for (long long a = 0; a < size_; ++a) {
        const Poly fa = decode(static_cast<Elt>(a));
        Poly nf(e, 0);
        for (int i = 0; i < e; ++i) nf[i] = (p - fa[i]) % p;
        neg_[a] = encode(nf);
        for (long long b = 0; b < size_; ++b) {
            const Poly fb = decode(static_cast<Elt>(b));
            Poly s(e, 0);
            for (int i = 0; i < e; ++i) s[i] = (fa[i] + fb[i]) % p;
            add_[idx(static_cast<Elt>(a), static_cast<Elt>(b))] = encode(s);
        }
    }

    // discrete-log tables on a generator of the unit group
    log_.assign(size_, -1);
    exp_.clear();
    for (long long gen = 1; gen < size_; ++gen) {
        if (size_ > 2 && gen == 1) continue;
        const Poly g = decode(static_cast<Elt>(gen));
        std::vector<Elt> powers;
        Poly cur(e, 0);
        cur[0] = 1;
        powers.push_back(encode(cur));
        bool full = false;
        for (long long k = 1; k < size_; ++k) {
            cur = poly_mul_mod(cur, g, mod, p);
            const Elt enc = encode(cur);
            if (enc == 1) {
                full = (k == size_ - 1);
                break;
            }
            powers.push_back(enc);
        }
        if (full) {
            exp_.assign(powers.begin(), powers.end());
            for (long long k = 0; k < size_ - 1; ++k) log_[exp_[k]] = k;
            break;
        }
    }
    if (exp_.empty()) throw std::logic_error("no multiplicative generator found");

    trace_.resize(size_);
    for (long long a = 0; a < size_; ++a) {
        Elt acc = 0;
        Elt cur = static_cast<Elt>(a);
        for (int i = 0; i < e; ++i) {
            acc = add(acc, cur);
            cur = pow(cur, p);
        }
        // the trace lands in the prime subfield, whose encoding is the integer
        if (acc >= p) throw std::logic_error("trace left the prime subfield");
        trace_[a] = acc;
    }
}

GaloisField::Elt GaloisField::from_int(long long a) const {
    long long r = a % p_;
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
}

GaloisField::Elt GaloisField::inv(Elt a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

GaloisField::Elt GaloisField::pow(Elt a, long long k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw std::domain_error("negative power of zero");
        return 0;
    }
    long long l = (log_[a] * (k % (size_ - 1))) % (size_ - 1);
    if (l < 0) l += size_ - 1;
    return exp_[l];
}

bool GaloisField::in_subfield(Elt a, int d) const {
    if (e_ % d != 0) throw std::invalid_argument("in_subfield: degree must divide");
    long long pd = 1;
    for (int i = 0; i < d; ++i) pd *= p_;
    return pow(a, pd) == a;
}

long long GaloisField::subfield_trace_to_prime(Elt a, int d) const {
    if (!in_subfield(a, d)) throw std::invalid_argument("element not in the requested subfield");
    Elt acc = 0;
    Elt cur = a;
    for (int i = 0; i < d; ++i) {
        acc = add(acc, cur);
        cur = pow(cur, p_);
    }
    if (acc >= p_) throw std::logic_error("subfield trace left the prime subfield");
    return acc;
}

const GaloisField& GaloisField::get(long long p, int e) {
    static std::mutex mu;
    static std::map<std::pair<long long, int>, GaloisField*> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = registry.find(key);
    if (it == registry.end()) it = registry.emplace(key, new GaloisField(p, e)).first;
    return *it->second;
}

}  // namespace hecke
