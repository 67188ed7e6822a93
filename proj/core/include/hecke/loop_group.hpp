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

#ifndef HECKE_LOOP_GROUP_HPP
#define HECKE_LOOP_GROUP_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hecke/finite_field.hpp"
#include "hecke/numeric.hpp"

namespace hecke {

inline constexpr int kMaxTruncation = 3;
inline constexpr int kMaxMatrixRank = 3;

// Element of F[t]/t^m: coefficient array in the field's index encoding.
struct RingElt {
    std::array<GaloisField::Elt, kMaxTruncation> c{};

    bool operator==(const RingElt&) const = default;
    auto operator<=>(const RingElt& o) const { return c <=> o.c; }
};

// Square matrix over the truncated ring, dimensions carried by the model.
struct LoopMatrix {
    std::array<RingElt, kMaxMatrixRank * kMaxMatrixRank> a{};

    bool operator==(const LoopMatrix&) const = default;
    auto operator<=>(const LoopMatrix&) const = default;
};

// SL_r over F_{q^n}[t]/t^m with q = p^k, realized inside GF(p, k*n).
class TruncatedLoopGroupModel {
  public:
    // group_rank is the matrix size r (2 or 3); q must be a prime power.
    TruncatedLoopGroupModel(int group_rank, long long q, int n, int m);

    int r() const { return r_; }
    int m() const { return m_; }
    int n() const { return n_; }
    long long q() const { return q_; }
    long long p() const { return field_->characteristic(); }
    const GaloisField& field() const { return *field_; }

    // |SL_r(F_{q^n})| * (q^n)^{(m-1) dim G}
    BigInt cardinality() const;

    RingElt ring_zero() const { return RingElt{}; }
    RingElt ring_one() const;
    RingElt ring_add(const RingElt& x, const RingElt& y) const;
    RingElt ring_mul(const RingElt& x, const RingElt& y) const;
    RingElt ring_neg(const RingElt& x) const;
    bool ring_is_unit(const RingElt& x) const { return x.c[0] != 0; }
    RingElt ring_inv(const RingElt& x) const;
    std::vector<RingElt> ring_elements() const;

    LoopMatrix identity() const;
    LoopMatrix mul(const LoopMatrix& x, const LoopMatrix& y) const;
    LoopMatrix inverse(const LoopMatrix& x) const;
    RingElt det(const LoopMatrix& x) const;
    bool is_sl(const LoopMatrix& x) const;

    RingElt& at(LoopMatrix& mat, int i, int j) const { return mat.a[i * r_ + j]; }
    const RingElt& at(const LoopMatrix& mat, int i, int j) const { return mat.a[i * r_ + j]; }

    // entrywise, coefficientwise x -> x^(q^l) (the arithmetic Frobenius of
    // the base field acting on the extension)
    LoopMatrix frobenius(const LoopMatrix& x, int l = 1) const;

    // elementary matrices E_ij(b t^a) over a prime-field basis of the ring;
    // they generate SL_r over this local ring
    std::vector<LoopMatrix> elementary_generators() const;

    // Full point enumeration by closure under the generators; throws
    // std::domain_error past the budget.
    std::vector<LoopMatrix> enumerate(std::size_t budget = 2'000'000) const;

    std::string str(const LoopMatrix& x) const;

  private:
    int r_, n_, m_;
    long long q_;
    int base_degree_;  // k with q = p^k
    const GaloisField* field_;
};

// Orbit of a subgroup (given by its elements) under conjugation by the whole
// group, walked via the elementary generators. Each orbit member carries a
// transporter g with S_i = g S_0 g^{-1}.
struct ConjugateSubgroup {
    std::vector<LoopMatrix> elements;  // sorted
    LoopMatrix transporter;
};

std::vector<ConjugateSubgroup> conjugacy_orbit(const TruncatedLoopGroupModel& model,
                                               std::vector<LoopMatrix> subgroup,
                                               std::size_t budget = 1'000'000);

}  // namespace hecke

#endif
