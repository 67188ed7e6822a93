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

#ifndef HECKE_FINITE_FIELD_HPP
#define HECKE_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace hecke {

// GF(p^e) in a polynomial basis over the prime field. Elements are indices
// 0..p^e-1 encoding coefficient vectors base p; multiplication goes through
// discrete-log tables, so construction is O(p^e) and the size cap is modest.
class GaloisField {
  public:
    using Elt = std::uint16_t;

    // Process-wide registry; fields are built once per (p, e).
    static const GaloisField& get(long long p, int e);

    long long characteristic() const { return p_; }
    int degree() const { return e_; }
    long long size() const { return size_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt from_int(long long a) const;  // prime-subfield embedding

    Elt add(Elt a, Elt b) const { return add_[idx(a, b)]; }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt neg(Elt a) const { return neg_[a]; }
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (size_ - 1)];
    }
    Elt inv(Elt a) const;
    Elt pow(Elt a, long long k) const;
    Elt frobenius(Elt a) const { return pow(a, p_); }

    // Trace to the prime field, as an integer in [0, p).
    long long trace_to_prime(Elt a) const { return trace_[a]; }
    // Trace of the subfield GF(p^d) down to the prime field; a must lie in it.
    long long subfield_trace_to_prime(Elt a, int d) const;
    bool in_subfield(Elt a, int d) const;  // d divides e

    const std::vector<Elt>& modulus() const { return modulus_; }  // degree-e coefficients

  private:
    GaloisField(long long p, int e);

    std::size_t idx(Elt a, Elt b) const { return static_cast<std::size_t>(a) * size_ + b; }

    long long p_;
    int e_;
    long long size_;
    std::vector<Elt> add_;   // size^2 addition table
    std::vector<Elt> neg_;
    std::vector<long long> log_;  // discrete log base a fixed generator
    std::vector<Elt> exp_;
    std::vector<long long> trace_;
    std::vector<Elt> modulus_;
};

}  // namespace hecke

#endif
