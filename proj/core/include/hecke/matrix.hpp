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

#ifndef HECKE_MATRIX_HPP
#define HECKE_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hecke/numeric.hpp"

namespace hecke {

// Small dense matrix over the exact rationals. Ranks here are at most 8, so
// nothing is tuned; Gaussian elimination with exact pivots does all the work.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigRat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigRat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        RatMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const BigRat& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    std::vector<BigRat> apply(const std::vector<BigRat>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<BigRat> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    RatMatrix transposed() const {
        RatMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // Inverse via Gauss-Jordan; throws when singular.
    RatMatrix inverse() const;

    // Row-echelon rank.
    std::size_t rank() const;

    // Solves A x = b; throws when A is singular (square only).
    std::vector<BigRat> solve(const std::vector<BigRat>& b) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigRat> a_;
};

// Integer matrices act on weight coordinates; kept as plain vectors.
using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<long long> int_apply(const IntMatrix& m, const std::vector<long long>& v);
long long int_det(IntMatrix m);

}  // namespace hecke

#endif
