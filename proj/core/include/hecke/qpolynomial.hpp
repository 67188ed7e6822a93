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

#ifndef HECKE_QPOLYNOMIAL_HPP
#define HECKE_QPOLYNOMIAL_HPP

#include <complex>
#include <map>
#include <string>

#include "hecke/numeric.hpp"

namespace hecke {

// Laurent polynomial in one formal variable with integer coefficients.
// Exponents are plain integers; q-power series use the variable v = q^{1/2},
// so the exponent n stands for q^{n/2}.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(BigInt constant) {
        if (constant != 0) c_[0] = std::move(constant);
    }
    static QPolynomial monomial(long long expo, BigInt coeff = BigInt(1)) {
        QPolynomial p;
        if (coeff != 0) p.c_[expo] = std::move(coeff);
        return p;
    }

    const std::map<long long, BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(long long expo) const {
        auto it = c_.find(expo);
        return it == c_.end() ? BigInt(0) : it->second;
    }
    long long min_exponent() const;
    long long max_exponent() const;
    BigInt leading_coeff() const;

    bool operator==(const QPolynomial&) const = default;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    QPolynomial operator-() const;
    QPolynomial& operator*=(const QPolynomial& o);

    // substitute the variable by its inverse (mirror exponents)
    QPolynomial reciprocal_variable() const;
    // multiply by variable^k
    QPolynomial shifted(long long k) const;
    // substitute variable -> variable^factor
    QPolynomial stretched(long long factor) const;

    // sum of coefficients = evaluation at 1
    BigInt eval_at_one() const;
    double eval(double x) const;
    std::complex<double> eval(std::complex<double> x) const;

    // exact evaluation as a + b*sqrt(q) of a v-polynomial at v = sqrt(q);
    // requires nonnegative exponents
    void eval_sqrt(const BigInt& q, BigInt& int_part, BigInt& sqrt_part) const;

    std::string str(const std::string& var = "v") const;

  private:
    std::map<long long, BigInt> c_;
    void strip();
};

// Exact quotient a / b in the polynomial ring; throws std::domain_error when
// the division leaves a remainder.
QPolynomial poly_divide_exact(const QPolynomial& a, const QPolynomial& b);

}  // namespace hecke

#endif
