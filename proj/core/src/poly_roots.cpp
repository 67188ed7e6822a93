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

#include "hecke/poly_roots.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace hecke {

std::vector<std::complex<double>> companion_roots(const std::vector<std::complex<double>>& c) {
    const std::size_t n = c.size();
    if (n == 0) return {};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -c[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));

    auto eval = [&](std::complex<double> x, std::complex<double>& p, std::complex<double>& dp) {
        p = 1.0;
        dp = 0.0;
        for (std::size_t k = n; k-- > 0;) {
            dp = dp * x + p;
            p = p * x + c[k];
        }
    };
    for (auto& r : roots) {
        for (int it = 0; it < 8; ++it) {
            std::complex<double> p, dp;
            eval(r, p, dp);
            if (std::abs(dp) < 1e-14) break;
            const std::complex<double> step = p / dp;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            // guard against divergence near multiple roots
            if (std::abs(step) > 1.0 + std::abs(r)) break;
            r -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
        }
    }
    return roots;
}

std::vector<std::complex<double>> companion_roots(const std::vector<BigRat>& c) {
    std::vector<std::complex<double>> cc(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cc[i] = std::complex<double>(to_double(c[i]), 0.0);
    return companion_roots(cc);
}

bool reconstruct_rational_root(const std::vector<BigRat>& coeffs, std::complex<double> z,
                               long long max_den, BigRat& out) {
    if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real()))) return false;
    // continued-fraction expansion of the real part
    double x = z.real();
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 40; ++it) {
        const double fl = std::floor(x);
        if (fl > 9e17 || fl < -9e17) return false;
        const long long a = static_cast<long long>(fl);
        const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = x - fl;
        if (frac < 1e-12) break;
        x = 1.0 / frac;
    }
    if (q1 == 0) return false;
    const BigRat cand(p1, q1);
    // exact verification against the monic polynomial
    BigRat val = 1;
    for (std::size_t k = coeffs.size(); k-- > 0;) val = val * cand + coeffs[k];
    // note: evaluated via Horner on x^n + ... by seeding with 1
    if (val == 0) {
        out = cand;
        return true;
    }
    return false;
}

}  // namespace hecke
