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

#include "hecke/qpolynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hecke {

void QPolynomial::strip() {
    for (auto it = c_.begin(); it != c_.end();)
        it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

long long QPolynomial::min_exponent() const {
    if (c_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return c_.begin()->first;
}

long long QPolynomial::max_exponent() const {
    if (c_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return c_.rbegin()->first;
}

BigInt QPolynomial::leading_coeff() const {
    if (c_.empty()) return 0;
    return c_.rbegin()->second;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (const auto& [e, v] : o.c_) c_[e] += v;
    strip();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    for (const auto& [e, v] : o.c_) c_[e] -= v;
    strip();
    return *this;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    QPolynomial r = *this;
    r += o;
    return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    QPolynomial r = *this;
    r -= o;
    return r;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r = *this;
    for (auto& [e, v] : r.c_) v = -v;
    return r;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    QPolynomial r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) r.c_[e1 + e2] += v1 * v2;
    r.strip();
    return r;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
    *this = *this * o;
    return *this;
}

QPolynomial QPolynomial::reciprocal_variable() const {
    QPolynomial r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

QPolynomial QPolynomial::shifted(long long k) const {
    QPolynomial r;
    for (const auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
}

QPolynomial QPolynomial::stretched(long long factor) const {
    QPolynomial r;
    for (const auto& [e, v] : c_) r.c_[e * factor] = v;
    return r;
}

BigInt QPolynomial::eval_at_one() const {
    BigInt s = 0;
    for (const auto& [e, v] : c_) s += v;
    return s;
}

double QPolynomial::eval(double x) const {
    double s = 0;
    for (const auto& [e, v] : c_) s += static_cast<double>(v) * std::pow(x, static_cast<double>(e));
    return s;
}

std::complex<double> QPolynomial::eval(std::complex<double> x) const {
    std::complex<double> s = 0;
    for (const auto& [e, v] : c_)
        s += static_cast<double>(v) * std::pow(x, std::complex<double>(static_cast<double>(e), 0.0));
    return s;
}

void QPolynomial::eval_sqrt(const BigInt& q, BigInt& int_part, BigInt& sqrt_part) const {
    int_part = 0;
    sqrt_part = 0;
    for (const auto& [e, v] : c_) {
        if (e < 0) throw std::domain_error("eval_sqrt requires nonnegative exponents");
        BigInt qpow = 1;
        for (long long k = 0; k < e / 2; ++k) qpow *= q;
        if (e % 2 == 0)
            int_part += v * qpow;
        else
            sqrt_part += v * qpow;
    }
}

std::string QPolynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, v] = *it;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        first = false;
        const BigInt a = v < 0 ? BigInt(-v) : v;
        if (a != 1 || e == 0) os << a.str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

QPolynomial poly_divide_exact(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    QPolynomial rem = a, quot;
    while (!rem.is_zero()) {
        if (rem.max_exponent() - rem.min_exponent() < b.max_exponent() - b.min_exponent())
            throw std::domain_error("inexact polynomial division");
        const long long shift = rem.max_exponent() - b.max_exponent();
        const BigInt lead = rem.leading_coeff();
        if (lead % b.leading_coeff() != 0) throw std::domain_error("inexact polynomial division");
        const BigInt c = lead / b.leading_coeff();
        const QPolynomial term = QPolynomial::monomial(shift, c);
        quot += term;
        rem -= term * b;
    }
    return quot;
}

}  // namespace hecke
