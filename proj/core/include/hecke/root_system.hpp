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

#ifndef HECKE_ROOT_SYSTEM_HPP
#define HECKE_ROOT_SYSTEM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/numeric.hpp"

namespace hecke {

// Simple Lie types A..G with Bourbaki numbering of the simple roots.
// Rank is capped at 8 (enough for E8); enumeration-heavy operations state
// their cost in the implementation.
struct CartanType {
    char family = 'A';  // one of A,B,C,D,E,F,G
    int rank = 1;

    // Parses strings like "A1", "G2", "E8". Throws std::invalid_argument.
    static CartanType parse(const std::string& s);
    std::string str() const { return std::string(1, family) + std::to_string(rank); }

    // Validates the (family, rank) combination: A>=1, B,C,D>=2, E in {6,7,8},
    // F=4, G=2, rank<=8. Throws std::invalid_argument otherwise.
    void validate() const;

    auto operator<=>(const CartanType&) const = default;
};

using Coord = std::vector<long long>;

// Integer vector in the basis of fundamental weights.
struct Weight {
    Coord fund;

    Weight() = default;
    explicit Weight(Coord c) : fund(std::move(c)) {}

    std::size_t rank() const { return fund.size(); }
    auto operator<=>(const Weight&) const = default;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(long long k) const;
    bool is_zero() const;
    std::string str() const;
};

// Integer vector in the basis of fundamental coweights.
struct Coweight {
    Coord fund;

    Coweight() = default;
    explicit Coweight(Coord c) : fund(std::move(c)) {}

    std::size_t rank() const { return fund.size(); }
    auto operator<=>(const Coweight&) const = default;
    bool is_zero() const;
    std::string str() const;
};

// A Weyl group element, stored as its integer matrix on fundamental-weight
// coordinates. Equality is matrix equality.
struct WeylElement {
    IntMatrix mat;

    auto operator<=>(const WeylElement&) const = default;
};

struct PositiveRoot {
    Weight weight;  // fundamental-weight coordinates
    Coord root;     // simple-root coordinates (cached)
};

struct PositiveCoroot {
    Coweight coweight;  // fundamental-coweight coordinates
    Coord coroot;       // simple-coroot coordinates (cached)
};

class RootDatum {
  public:
    explicit RootDatum(CartanType type);

    const CartanType& type() const { return type_; }
    std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }

    // cartan(i, j) = <alpha_i, alpha_j^vee>.
    long long cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
    const IntMatrix& cartan_matrix() const { return cartan_; }
    const RatMatrix& cartan_inverse() const { return cartan_inv_; }

    // Positive roots in graded-lex order on simple-root coordinates.
    const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
    const std::vector<PositiveCoroot>& positive_coroots() const { return positive_coroots_; }

    Weight simple_root(std::size_t i) const;
    Coweight simple_coroot(std::size_t i) const;

    // Highest root (last in graded-lex order; unique for simple types).
    Weight highest_root() const;

    // Symmetrizer d_i = (alpha_i, alpha_i)/2, normalized so long roots have
    // squared length 2.
    const std::vector<BigRat>& symmetrizers() const { return sym_; }

    // W-invariant symmetric form on the rational weight space.
    BigRat form(const Weight& a, const Weight& b) const;
    // integer numerator of the form against the fixed common denominator
    long long form_numerator(const Weight& a, const Weight& b) const;
    long long form_denominator() const { return form_den_; }

    // Simple-root coordinates of a weight (rational in general); integral
    // exactly when the weight lies in the root lattice.
    std::vector<BigRat> to_root_coords(const Weight& w) const;
    bool root_lattice_coords(const Weight& w, Coord& out) const;
    Weight from_root_coords(const Coord& c) const;

    const IntMatrix& simple_reflection(std::size_t i) const { return refl_[i]; }

  private:
    CartanType type_;
    IntMatrix cartan_;
    RatMatrix cartan_inv_;          // pairing table <omega_i, omega_j^vee>
    std::vector<BigRat> sym_;
    std::vector<PositiveRoot> positive_roots_;
    std::vector<PositiveCoroot> positive_coroots_;
    std::vector<IntMatrix> refl_;   // simple reflections on weight coords
};

// Factory named after what it does; validates the type.
RootDatum build_root_system(CartanType type);
inline RootDatum build_root_system(const std::string& s) { return build_root_system(CartanType::parse(s)); }

// Canonical pairing between the rational weight and coweight spaces.
// Exact rational; integral whenever weight and coweight lattices match up
// (e.g. weights against the coroot lattice).
BigRat pairing(const RootDatum& datum, const Weight& w, const Coweight& c);

// Pairing that must be integral; throws std::domain_error otherwise.
BigInt pairing_int(const RootDatum& datum, const Weight& w, const Coweight& c);

// rho = sum of fundamental weights = half the sum of the positive roots.
Weight rho(const RootDatum& datum);
// Checks 2*rho == sum of positive roots, coordinatewise.
bool rho_check(const RootDatum& datum);
// Half-sum of the positive coroots = sum of fundamental coweights.
Coweight rho_coweight(const RootDatum& datum);

bool is_dominant(const RootDatum& datum, const Weight& w);
bool is_dominant(const RootDatum& datum, const Coweight& c);

Weight apply_simple_reflection(const RootDatum& datum, std::size_t i, const Weight& w);
Coweight apply_simple_reflection(const RootDatum& datum, std::size_t i, const Coweight& c);

Weight act(const WeylElement& w, const Weight& wt);
Coweight act_on_coweight(const RootDatum& datum, const WeylElement& w, const Coweight& c);

// Full orbit of a weight under the reflection group (breadth-first closure).
std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& w);

// Dominant representative together with a word in simple reflections.
// Applying the word to the representative (rightmost letter first)
// reproduces the input.
struct DominantRep {
    Weight weight;
    std::vector<std::size_t> word;
};
DominantRep dominant_representative(const RootDatum& datum, const Weight& w);
Weight apply_word(const RootDatum& datum, const std::vector<std::size_t>& word, const Weight& w);

struct CoweightDominantRep {
    Coweight coweight;
    std::vector<std::size_t> word;
};
CoweightDominantRep dominant_representative(const RootDatum& datum, const Coweight& c);

// The whole Weyl group as matrices. Size grows like the classical order
// formula; the call refuses types whose order exceeds max_order.
std::vector<WeylElement> full_weyl_group(const RootDatum& datum, std::uint64_t max_order = 2'000'000);

// Classical order formula (A_n: (n+1)!, B_n/C_n: 2^n n!, D_n: 2^{n-1} n!,
// G2: 12, F4: 1152, E6/E7/E8: known constants).
BigInt weyl_order_formula(CartanType type);

// Number of positive roots sent to negatives; the Coxeter length.
std::size_t weyl_length(const RootDatum& datum, const WeylElement& w);
// Determinant (+1/-1).
int weyl_sign(const WeylElement& w);

}  // namespace hecke

#endif
