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

#include "hecke/satake.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hecke/poly_roots.hpp"

namespace hecke {

namespace {

std::complex<double> ipow(std::complex<double> base, long long e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    std::complex<double> acc = 1.0;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

std::complex<double> eval_weight(const SatakeParameter& t, const Weight& mu) {
    if (mu.rank() != t.values.size()) throw std::invalid_argument("eval_weight: rank mismatch");
    std::complex<double> acc = 1.0;
    for (std::size_t i = 0; i < t.values.size(); ++i) acc *= ipow(t.values[i], mu.fund[i]);
    return acc;
}

std::complex<double> tr_lambda(const RootDatum& datum, const SatakeParameter& t, const Weight& lambda) {
    if (datum.type() != t.type) throw std::invalid_argument("tr_lambda: type mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& [mu, m] : weight_multiplicities(datum, lambda).mult)
        acc += static_cast<double>(m) * eval_weight(t, mu);
    return acc;
}

SatakeParameter principal_parameter(const RootDatum& datum, double q) {
    if (!(q > 1.0)) throw std::invalid_argument("principal_parameter: q must exceed 1");
    SatakeParameter t;
    t.type = datum.type();
    t.values.resize(datum.rank());
    const Coweight rv = rho_coweight(datum);
    for (std::size_t i = 0; i < datum.rank(); ++i) {
        Weight om(Coord(datum.rank(), 0));
        om.fund[i] = 1;
        const double e = to_double(pairing(datum, om, rv));
        t.values[i] = std::pow(q, e);
    }
    return t;
}

QPolynomial principal_trace_poly(const RootDatum& datum, const Weight& lambda) {
    QPolynomial p;
    const Coweight rv = rho_coweight(datum);
    for (const auto& [mu, m] : weight_multiplicities(datum, lambda).mult) {
        const BigInt e = to_integer(2 * pairing(datum, mu, rv), "2<mu,rho^vee>");
        p += QPolynomial::monomial(to_i64(e), m);
    }
    return p;
}

bool is_tempered(const SatakeParameter& t, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("is_tempered: tolerance must be positive");
    return std::all_of(t.values.begin(), t.values.end(),
                       [&](const std::complex<double>& v) { return std::abs(std::abs(v) - 1.0) <= tol; });
}

SatakeParameter base_change(const SatakeParameter& t, long long n) {
    if (n < 1) throw std::invalid_argument("base_change: degree must be >= 1");
    SatakeParameter r = t;
    for (auto& v : r.values) v = ipow(v, n);
    return r;
}

SatakeParameter weyl_transform(const RootDatum& datum, const SatakeParameter& t, const WeylElement& w) {
    // (w.t)^mu = t^{w^{-1} mu}; on the value basis this reads off the images
    // of the fundamental weights under w^{-1}.
    const std::size_t n = datum.rank();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = w.mat[i][j];
    const RatMatrix minv = m.inverse();
    IntMatrix winv(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) winv[i][j] = to_i64(to_integer(minv(i, j), "Weyl inverse"));
    SatakeParameter r;
    r.type = t.type;
    r.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Weight om(Coord(n, 0));
        om.fund[i] = 1;
        r.values[i] = eval_weight(t, Weight(int_apply(winv, om.fund)));
    }
    return r;
}

TraceSequence trace_sequence_from_parameter(const RootDatum& datum, const SatakeParameter& t,
                                            const Weight& lambda, std::size_t n_terms) {
    TraceSequence seq;
    seq.is_exact = false;
    seq.dim_v = to_i64(weyl_dim(datum, lambda));
    std::vector<std::complex<double>> eig;
    for (const auto& [mu, m] : weight_multiplicities(datum, lambda).mult) {
        const std::complex<double> v = eval_weight(t, mu);
        for (BigInt k = 0; k < m; ++k) eig.push_back(v);
    }
    std::vector<std::complex<double>> pow = eig;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        std::complex<double> s = 0.0;
        for (std::size_t i = 0; i < eig.size(); ++i) s += pow[i];
        seq.numeric.push_back(s);
        for (std::size_t i = 0; i < eig.size(); ++i) pow[i] *= eig[i];
    }
    return seq;
}

namespace {

// elementary symmetric functions from power sums (Newton's identities)
std::vector<BigRat> newton_to_elementary(const std::vector<BigRat>& p, std::size_t d) {
    std::vector<BigRat> e(d + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        BigRat acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[k - i] * p[i - 1];
        e[k] = acc / BigRat(k);
    }
    return e;
}

std::vector<std::complex<double>> newton_to_elementary(const std::vector<std::complex<double>>& p,
                                                       std::size_t d) {
    std::vector<std::complex<double>> e(d + 1);
    e[0] = 1.0;
    for (std::size_t k = 1; k <= d; ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1.0 : -1.0) * e[k - i] * p[i - 1];
        e[k] = acc / static_cast<double>(k);
    }
    return e;
}

// exact polynomial gcd (monic remainder sequence) for square-free reduction
std::vector<BigRat> poly_gcd(std::vector<BigRat> a, std::vector<BigRat> b) {
    auto degree = [](const std::vector<BigRat>& p) {
        std::size_t d = p.size();
        while (d > 0 && p[d - 1] == 0) --d;
        return d;  // number of coefficients; degree + 1
    };
    while (true) {
        const std::size_t db = degree(b);
        if (db == 0) break;
        const std::size_t da = degree(a);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        // a mod b
        std::vector<BigRat> r = a;
        for (std::size_t sh = da - db + 1; sh-- > 0;) {
            const BigRat f = r[db - 1 + sh] / b[db - 1];
            if (f == 0) continue;
            for (std::size_t i = 0; i < db; ++i) r[i + sh] -= f * b[i];
        }
        r.resize(db > 1 ? db - 1 : 1);
        a = b;
        b = r;
    }
    const std::size_t da = degree(a);
    std::vector<BigRat> g(a.begin(), a.begin() + static_cast<long>(da));
    if (!g.empty() && g.back() != 1) {
        const BigRat lead = g.back();
        for (auto& x : g) x /= lead;
    }
    return g;
}

}  // namespace

SpectralRadiusResult spectral_radius_from_traces(const TraceSequence& seq) {
    const std::size_t d = static_cast<std::size_t>(seq.dim_v);
    if (d == 0) throw std::invalid_argument("spectral radius: dimension must be positive");
    if (seq.size() < d)
        throw std::invalid_argument("spectral radius: need power sums up to the dimension");

    SpectralRadiusResult res;
    if (seq.is_exact) {
        const std::vector<BigRat>& p = seq.exact;
        const std::vector<BigRat> e = newton_to_elementary(p, d);
        // characteristic polynomial x^d - e1 x^{d-1} + ... (monic, constant first)
        std::vector<BigRat> coeffs(d);
        for (std::size_t k = 1; k <= d; ++k) coeffs[d - k] = (k % 2 == 1 ? -e[k] : e[k]);
        // consistency of any extra terms with the recurrence
        for (std::size_t n = d; n < p.size(); ++n) {
            BigRat acc = 0;
            for (std::size_t k = 1; k <= d; ++k)
                acc += (k % 2 == 1 ? 1 : -1) * e[k] * p[n - k];
            if (p[n] != acc)
                throw std::domain_error("spectral radius: sequence inconsistent with dimension " +
                                        std::to_string(d));
        }

        // square-free part for well-conditioned numeric roots
        std::vector<BigRat> full(d + 1);
        for (std::size_t i = 0; i < d; ++i) full[i] = coeffs[i];
        full[d] = 1;
        std::vector<BigRat> deriv(d);
        for (std::size_t i = 1; i <= d; ++i) deriv[i - 1] = BigRat(i) * full[i];
        const std::vector<BigRat> g = poly_gcd(full, deriv);
        std::vector<BigRat> sf = full;
        if (g.size() > 1) {
            // exact division full / g
            std::vector<BigRat> quot(full.size() - g.size() + 1);
            std::vector<BigRat> rem = full;
            for (std::size_t sh = quot.size(); sh-- > 0;) {
                const BigRat f = rem[g.size() - 1 + sh] / g.back();
                quot[sh] = f;
                if (f != 0)
                    for (std::size_t i = 0; i < g.size(); ++i) rem[i + sh] -= f * g[i];
            }
            sf = quot;
        }
        std::vector<BigRat> sf_monic(sf.begin(), sf.end() - 1);
        for (auto& x : sf_monic) x /= sf.back();

        const auto simple_roots = companion_roots(sf_monic);
        // multiplicity of each simple root inside the full polynomial by exact
        // deflation when rational, numeric Horner otherwise
        std::map<long long, long long> assigned;  // index -> multiplicity
        std::vector<std::pair<std::complex<double>, long long>> with_mult;
        bool all_exact = true;
        for (const auto& z : simple_roots) {
            BigRat exact;
            long long mult = 1;
            if (reconstruct_rational_root(sf_monic, z, 1'000'000, exact)) {
                // count exact multiplicity in the full characteristic polynomial
                std::vector<BigRat> cur = full;
                mult = 0;
                while (true) {
                    // synthetic division by (x - exact)
                    std::vector<BigRat> q(cur.size() - 1);
                    BigRat carry = cur.back();
                    for (std::size_t i = cur.size() - 1; i-- > 0;) {
                        q[i] = carry;
                        carry = cur[i] + carry * exact;
                    }
                    if (carry != 0) break;
                    ++mult;
                    cur = q;
                    if (cur.size() <= 1) break;
                }
                if (mult == 0) mult = 1;
                res.exact_eigenvalues.emplace_back(exact, mult);
                with_mult.emplace_back(std::complex<double>(to_double(exact), 0.0), mult);
            } else {
                all_exact = false;
                // numeric multiplicity from the gcd chain: evaluate g at z
                long long m = 1;
                std::vector<BigRat> gg = g;
                while (gg.size() > 1) {
                    std::complex<double> val = 0.0;
                    for (std::size_t i = gg.size(); i-- > 0;)
                        val = val * z + std::complex<double>(to_double(gg[i]), 0.0);
                    if (std::abs(val) > 1e-6) break;
                    ++m;
                    const std::vector<BigRat> dgg = [&] {
                        std::vector<BigRat> t(gg.size() - 1);
                        for (std::size_t i = 1; i < gg.size(); ++i) t[i - 1] = BigRat(i) * gg[i];
                        return t;
                    }();
                    gg = poly_gcd(gg, dgg);
                }
                with_mult.emplace_back(z, m);
            }
        }
        (void)assigned;
        long long total = 0;
        for (auto& [z, m] : with_mult) {
            for (long long i = 0; i < m; ++i) res.eigenvalues.push_back(z);
            total += m;
        }
        if (total != static_cast<long long>(d))
            throw std::logic_error("spectral radius: multiplicity bookkeeping failed");
        double best = 0;
        for (const auto& z : res.eigenvalues) best = std::max(best, std::abs(z));
        res.rho = best;
        if (all_exact) {
            BigRat mx = 0;
            for (const auto& [r, m] : res.exact_eigenvalues) {
                BigRat a = r < 0 ? BigRat(-r) : r;
                if (a > mx) mx = a;
            }
            res.rho_exact = mx;
            res.rho = to_double(mx);
        }
    } else {
        const std::vector<std::complex<double>>& p = seq.numeric;
        const auto e = newton_to_elementary(p, d);
        std::vector<std::complex<double>> coeffs(d);
        for (std::size_t k = 1; k <= d; ++k) coeffs[d - k] = (k % 2 == 1 ? -e[k] : e[k]);
        res.eigenvalues = companion_roots(coeffs);
        double best = 0;
        for (const auto& z : res.eigenvalues) best = std::max(best, std::abs(z));
        res.rho = best;

        // least-squares Hankel consistency check over the provided terms with
        // a conditioning report
        if (p.size() > d) {
            const std::size_t rows = p.size() - d;
            Eigen::MatrixXcd h(rows, d);
            Eigen::VectorXcd b(rows);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < d; ++c) h(r, c) = p[r + c];
                b(r) = p[r + d];
            }
            const Eigen::VectorXcd sol = h.colPivHouseholderQr().solve(b);
            const double resid = (h * sol - b).norm();
            const double scale = std::max(1.0, b.norm());
            std::ostringstream os;
            os << "hankel residual " << resid / scale;
            res.conditioning = os.str();
            if (resid / scale > 1e-6)
                throw std::domain_error("spectral radius: sequence inconsistent with dimension " +
                                        std::to_string(d) + " (" + res.conditioning + ")");
        }
    }

    // the advertised guarantee |a_n| <= dim * rho^n on all provided terms
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        const double an = seq.is_exact ? std::abs(to_double(seq.exact[n - 1])) : std::abs(seq.numeric[n - 1]);
        const double bound = static_cast<double>(seq.dim_v) * std::pow(res.rho, static_cast<double>(n));
        if (an > bound * (1.0 + 1e-6) + 1e-9)
            throw std::logic_error("spectral radius: certified bound violated");
    }
    return res;
}

WitnessResult temperedness_witness(const RootDatum& datum, const SatakeParameter& t, const Weight& lambda0,
                                   double c_bound, long long n_max, long long k_max) {
    if (!is_dominant(datum, lambda0) ||
        std::any_of(lambda0.fund.begin(), lambda0.fund.end(), [](long long x) { return x < 1; }))
        throw std::invalid_argument("temperedness_witness: lambda0 must be regular dominant");
    if (c_bound < 1.0) throw std::invalid_argument("temperedness_witness: C must be at least 1");

    struct KState {
        std::vector<std::complex<double>> eig;  // t^mu with multiplicity
        std::vector<std::complex<double>> pw;   // running n-th powers
        long long last_n = 0;
        double dim = 0;
    };
    std::map<long long, KState> states;
    auto state_for = [&](long long k) -> KState& {
        auto it = states.find(k);
        if (it != states.end()) return it->second;
        KState st;
        const Weight lam = lambda0.scaled(k);
        for (const auto& [mu, m] : weight_multiplicities(datum, lam).mult) {
            const std::complex<double> v = eval_weight(t, mu);
            for (BigInt i = 0; i < m; ++i) st.eig.push_back(v);
        }
        st.pw.assign(st.eig.size(), 1.0);
        st.dim = static_cast<double>(st.eig.size());
        return states.emplace(k, std::move(st)).first->second;
    };

    WitnessResult res;
    for (long long s = 2; s <= n_max + k_max; ++s) {
        for (long long k = 1; k <= std::min(k_max, s - 1); ++k) {
            const long long n = s - k;
            if (n < 1 || n > n_max) continue;
            KState& st = state_for(k);
            while (st.last_n < n) {
                for (std::size_t i = 0; i < st.eig.size(); ++i) st.pw[i] *= st.eig[i];
                ++st.last_n;
            }
            if (st.last_n != n) throw std::logic_error("witness search visited n out of order");
            std::complex<double> tr = 0.0;
            for (const auto& z : st.pw) tr += z;
            ++res.boxes_searched;
            if (std::abs(tr) > c_bound * st.dim) {
                res.found = true;
                res.n = n;
                res.k = k;
                res.trace_abs = std::abs(tr);
                res.dim = st.dim;
                return res;
            }
        }
    }
    return res;
}

}  // namespace hecke
