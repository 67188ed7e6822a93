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

#ifndef HECKE_NUMERIC_HPP
#define HECKE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

// Exact arithmetic everywhere a formula is evaluated; doubles appear only at
// explicit evaluation boundaries (complex Satake values, root moduli).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRat& r) { return rat_den(r) == 1; }

// Throws unless r is an exact integer.
inline BigInt to_integer(const BigRat& r, const char* what = "value") {
    if (!is_integer(r))
        throw std::domain_error(std::string(what) + " is not an integer: " + r.str());
    return rat_num(r);
}

inline std::int64_t to_i64(const BigInt& n, const char* what = "value") {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string(what) + " out of int64 range: " + n.str());
    return static_cast<std::int64_t>(n);
}

inline double to_double(const BigRat& r) { return static_cast<double>(r); }

}  // namespace hecke

#endif
