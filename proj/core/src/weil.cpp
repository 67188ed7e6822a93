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

#include "hecke/weil.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hecke/poly_roots.hpp"

namespace hecke {

VerifyWeilResult verify_weil(const WeilNumberClaim& claim, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("verify_weil: tolerance must be positive");
    if (claim.min_poly.size() < 2) throw std::invalid_argument("verify_weil: polynomial must be nonconstant");
    if (claim.min_poly.back() != 1) throw std::invalid_argument("verify_weil: polynomial must be monic");
    if (claim.q < 2) throw std::invalid_argument("verify_weil: q must be a prime power >= 2");

    std::vector<std::complex<double>> coeffs(claim.min_poly.size() - 1);
    for (std::size_t i = 0; i + 1 < claim.min_poly.size(); ++i)
        coeffs[i] = std::complex<double>(static_cast<double>(claim.min_poly[i]), 0.0);

    const double target = std::pow(static_cast<double>(claim.q), static_cast<double>(claim.weight) / 2.0);
    VerifyWeilResult out;
    out.ok = true;
    for (const auto& z : companion_roots(coeffs)) {
        WeilRootReport r;
        r.root = z;
        r.modulus = std::abs(z);
        r.target = target;
        r.ok = std::abs(r.modulus - target) <= tol * target;
        out.ok = out.ok && r.ok;
        out.roots.push_back(r);
    }
    return out;
}

namespace {

// Minimal linear recurrence of the sequence over Q (Berlekamp-Massey).
// Returns connection coefficients c with s[n] = sum_{i=1..L} c[i-1] s[n-i].
std::vector<BigRat> berlekamp_massey(const std::vector<BigRat>& s) {
    std::vector<BigRat> c{1}, b{1};
    std::size_t l = 0, m = 1;
    BigRat bb = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        BigRat d = s[n];
        for (std::size_t i = 1; i <= l; ++i) d += c[i] * s[n - i];
        if (d == 0) {
            ++m;
        } else if (2 * l <= n) {
            std::vector<BigRat> t = c;
            const BigRat coef = d / bb;
            c.resize(std::max(c.size(), b.size() + m), 0);
            for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
            l = n + 1 - l;
            b = t;
            bb = d;
            m = 1;
        } else {
            const BigRat coef = d / bb;
            c.resize(std::max(c.size(), b.size() + m), 0);
            for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
            ++m;
        }
    }
    std::vector<BigRat> conn(l);
    for (std::size_t i = 1; i <= l; ++i) conn[i - 1] = -(i < c.size() ? c[i] : BigRat(0));
    return conn;
}

}  // namespace

ExponentialSum recover_power_sum(const std::vector<BigInt>& s) {
    ExponentialSum out;
    if (s.empty()) throw std::invalid_argument("recover_power_sum: empty sequence");

    std::vector<BigRat> sr(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) sr[i] = BigRat(s[i]);
    const std::vector<BigRat> conn = berlekamp_massey(sr);
    const std::size_t r = conn.size();
    out.recurrence_order = static_cast<long long>(r);

    if (r == 0) {
        // the zero sequence
        out.determined = true;
        return out;
    }
    if (s.size() < 2 * r) {
        out.determined = false;
        std::ostringstream os;
        os << "undetermined: best-fit recurrence order " << r << " needs at least " << 2 * r
           << " terms, got " << s.size();
        out.note = os.str();
        return out;
    }

    // characteristic polynomial x^r - c_1 x^{r-1} - ... - c_r, constant first
    std::vector<BigRat> monic(r);
    for (std::size_t i = 1; i <= r; ++i) monic[r - i] = -conn[i - 1];

    // integer-root extraction by numeric roots plus exact verification
    const auto roots = companion_roots(monic);
    std::vector<BigInt> int_roots;
    std::vector<BigRat> residual = monic;  // deflated copy, constant first, monic implicit
    residual.push_back(1);
    for (const auto& z : roots) {
        BigRat cand;
        if (!reconstruct_rational_root(
                std::vector<BigRat>(residual.begin(), residual.end() - 1), z, 1, cand))
            continue;
        if (!is_integer(cand)) continue;
        // synthetic division to deflate
        std::vector<BigRat> q(residual.size() - 1);
        BigRat carry = residual.back();
        for (std::size_t i = residual.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = residual[i] + carry * cand;
        }
        if (carry != 0) continue;
        int_roots.push_back(rat_num(cand));
        residual = q;
        if (residual.size() <= 1) break;
    }
    if (residual.size() > 1) {
        out.determined = false;
        std::ostringstream os;
        os << "non-integral characteristic roots: residual factor of degree " << residual.size() - 1;
        out.note = os.str();
        return out;
    }
    std::sort(int_roots.begin(), int_roots.end());
    if (std::adjacent_find(int_roots.begin(), int_roots.end()) != int_roots.end()) {
        out.determined = false;
        out.note = "repeated characteristic root: sequence is not a plain signed power sum";
        return out;
    }
    if (std::find(int_roots.begin(), int_roots.end(), BigInt(0)) != int_roots.end()) {
        out.determined = false;
        out.note = "zero characteristic root: sequence has a transient prefix";
        return out;
    }

    // solve the Vandermonde system S_n = sum_i a_i root_i^n exactly
    RatMatrix v(r, r);
    std::vector<BigRat> rhs(r);
    for (std::size_t n = 0; n < r; ++n) {
        for (std::size_t i = 0; i < r; ++i) {
            BigRat p = 1;
            for (std::size_t k = 0; k <= n; ++k) p *= BigRat(int_roots[i]);
            v(n, i) = p;
        }
        rhs[n] = sr[n];
    }
    const auto a = v.solve(rhs);
    for (std::size_t i = 0; i < r; ++i) {
        if (!is_integer(a[i])) {
            out.determined = false;
            out.note = "non-integral coefficient " + a[i].str() + " on root " + int_roots[i].str();
            return out;
        }
        const BigInt ai = rat_num(a[i]);
        if (ai == 0) continue;
        ExponentialSum::Term t;
        t.root = int_roots[i];
        t.sign = ai < 0 ? -1 : 1;
        t.multiplicity = ai < 0 ? BigInt(-ai) : ai;
        out.terms.push_back(std::move(t));
    }

    // the reconstruction must reproduce every provided term
    for (std::size_t n = 1; n <= s.size(); ++n) {
        BigInt acc = 0;
        for (const auto& t : out.terms) {
            BigInt p = 1;
            for (std::size_t k = 0; k < n; ++k) p *= t.root;
            acc += BigInt(t.sign) * t.multiplicity * p;
        }
        if (acc != s[n - 1]) throw std::logic_error("recovered sum fails to reproduce the sequence");
    }
    out.determined = true;
    return out;
}

BigInt dim_bun(long long dim_g, long long genus, long long deg_d) {
    if (dim_g < 0 || genus < 0 || deg_d < 0) throw std::invalid_argument("dim_bun: inputs must be nonnegative");
    return BigInt(dim_g) * (genus + deg_d - 1);
}

BigInt dim_hecke(long long dim_g, long long genus, long long deg_d, const BigInt& d_w) {
    return dim_bun(dim_g, genus, deg_d) + d_w;
}

BigInt d_of_w(const RootDatum& datum, const std::vector<WeightedPlace>& w) {
    BigInt acc = 0;
    for (const auto& place : w) {
        if (place.degree < 1) throw std::invalid_argument("d_of_w: place degree must be positive");
        acc += BigInt(place.degree) * d_lambda(datum, place.coweight);
    }
    return acc;
}

BigInt avg_bound_exponent(long long dim_g, long long genus, long long deg_d, long long dim_h) {
    if (dim_g < 0 || genus < 0 || deg_d < 0 || dim_h < 0)
        throw std::invalid_argument("avg_bound_exponent: inputs must be nonnegative");
    return BigInt(dim_g) * (genus + deg_d - 1) - dim_h;
}

BigRat weil_weight_cap(long long dim_g, long long genus, long long deg_d, long long dim_h,
                       const BigInt& d_w1, const BigInt& d_w2) {
    return BigRat(dim_bun(dim_g, genus, deg_d)) + BigRat(d_w1) / 2 + BigRat(d_w2) / 2 - dim_h;
}

BigInt weil_weight_cap_proof_form(long long dim_g, long long genus, long long deg_d, long long dim_h,
                                  const BigInt& d_w1, const BigInt& d_w2) {
    return 2 * dim_bun(dim_g, genus, deg_d) - 2 * BigInt(dim_h) + d_w1 + d_w2;
}

}  // namespace hecke
