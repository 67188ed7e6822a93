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

#include "hecke/matrix.hpp"

namespace hecke {

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const BigRat p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const BigRat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::size_t RatMatrix::rank() const {
    RatMatrix a = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = r;
        while (piv < rows_ && a(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (a(i, col) == 0) continue;
            const BigRat f = a(i, col) / a(r, col);
            for (std::size_t j = col; j < cols_; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<BigRat> RatMatrix::solve(const std::vector<BigRat>& b) const {
    if (rows_ != cols_ || b.size() != rows_) throw std::invalid_argument("solve shape mismatch");
    RatMatrix inv = inverse();
    return inv.apply(b);
}

IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix r(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            const long long x = a[i][t];
            if (x == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += x * b[t][j];
        }
    return r;
}

std::vector<long long> int_apply(const IntMatrix& m, const std::vector<long long>& v) {
    std::vector<long long> r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

long long int_det(IntMatrix m) {
    // Fraction-free Gaussian elimination (Bareiss); fine at rank <= 8.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    long long prev = 1;
    long long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace hecke
