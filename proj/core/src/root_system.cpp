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

#include "hecke/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hecke {

namespace {

long long coord_height(const Coord& c) {
    return std::accumulate(c.begin(), c.end(), 0LL);
}

// Graded lexicographic: by height, then lexicographically.
bool graded_lex_less(const Coord& a, const Coord& b) {
    const long long ha = coord_height(a), hb = coord_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

}  // namespace

CartanType CartanType::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("Cartan type too short: '" + s + "'");
    CartanType t;
    t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    try {
        std::size_t pos = 0;
        t.rank = std::stoi(s.substr(1), &pos);
        if (pos != s.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rank in Cartan type '" + s + "'");
    }
    t.validate();
    return t;
}

void CartanType::validate() const {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("invalid Cartan type " + str() + ": " + why);
    };
    if (rank < 1) fail("rank must be positive");
    if (rank > 8) fail("rank capped at 8");
    switch (family) {
        case 'A': break;
        case 'B':
        case 'C':
        case 'D':
            if (rank < 2) fail("rank must be at least 2");
            break;
        case 'E':
            if (rank < 6 || rank > 8) fail("rank must be 6, 7 or 8");
            break;
        case 'F':
            if (rank != 4) fail("rank must be 4");
            break;
        case 'G':
            if (rank != 2) fail("rank must be 2");
            break;
        default:
            fail("unknown family");
    }
}

namespace {

// cartan(i, j) = <alpha_i, alpha_j^vee>, Bourbaki numbering.
IntMatrix make_cartan(const CartanType& t) {
    const std::size_t n = static_cast<std::size_t>(t.rank);
    IntMatrix a(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto simple_edge = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
    switch (t.family) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) simple_edge(i, i + 1);
            break;
        case 'B':
            for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
            a[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
            a[n - 1][n - 2] = -1;
            break;
        case 'C':
            for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
            a[n - 2][n - 1] = -1;  // alpha_n long
            a[n - 1][n - 2] = -2;
            break;
        case 'D':
            for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
            if (n >= 3) simple_edge(n - 3, n - 1);
            break;
        case 'E':
            // chain 1-3-4-5-6(-7-8), node 2 attached to node 4
            simple_edge(0, 2);
            simple_edge(2, 3);
            simple_edge(3, 4);
            simple_edge(4, 5);
            if (n >= 7) simple_edge(5, 6);
            if (n >= 8) simple_edge(6, 7);
            simple_edge(1, 3);
            break;
        case 'F':
            simple_edge(0, 1);
            a[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            a[2][1] = -1;
            simple_edge(2, 3);
            break;
        case 'G':
            a[0][1] = -1;  // alpha_1 short, alpha_2 long
            a[1][0] = -3;
            break;
    }
    return a;
}

std::vector<BigRat> make_symmetrizers(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<BigRat> d(n, 0);
    // Propagate d_j / d_i = a_ij / a_ji over the Dynkin graph, then normalize
    // so that the longest root has squared length 2.
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        d[start] = 1;
        seen[start] = true;
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty()) {
            const std::size_t i = q.front();
            q.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0 || seen[j]) continue;
                d[j] = d[i] * BigRat(a[j][i]) / BigRat(a[i][j]);
                seen[j] = true;
                q.push(j);
            }
        }
    }
    BigRat mx = d[0];
    for (const auto& x : d) mx = std::max(mx, x);
    for (auto& x : d) x /= mx;
    return d;
}

}  // namespace

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < fund.size(); ++i) r.fund[i] += o.fund[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < fund.size(); ++i) r.fund[i] -= o.fund[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.fund) x = -x;
    return r;
}

Weight Weight::scaled(long long k) const {
    Weight r = *this;
    for (auto& x : r.fund) x *= k;
    return r;
}

bool Weight::is_zero() const {
    return std::all_of(fund.begin(), fund.end(), [](long long x) { return x == 0; });
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < fund.size(); ++i) os << (i ? "," : "") << fund[i];
    os << ')';
    return os.str();
}

bool Coweight::is_zero() const {
    return std::all_of(fund.begin(), fund.end(), [](long long x) { return x == 0; });
}

std::string Coweight::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < fund.size(); ++i) os << (i ? "," : "") << fund[i];
    os << ')';
    return os.str();
}

RootDatum::RootDatum(CartanType type) : type_(type) {
    type_.validate();
    const std::size_t n = rank();
    cartan_ = make_cartan(type_);
    sym_ = make_symmetrizers(cartan_);

    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cartan_[i][j];
    cartan_inv_ = a.inverse();

    // Close the simple roots under simple reflections; roots are tracked in
    // simple-root coordinates where reflections are integral.
    std::set<Coord> all;
    std::queue<Coord> work;
    for (std::size_t i = 0; i < n; ++i) {
        Coord e(n, 0);
        e[i] = 1;
        all.insert(e);
        work.push(e);
    }
    while (!work.empty()) {
        Coord c = work.front();
        work.pop();
        for (std::size_t j = 0; j < n; ++j) {
            long long p = 0;  // <beta, alpha_j^vee>
            for (std::size_t i = 0; i < n; ++i) p += c[i] * cartan_[i][j];
            Coord c2 = c;
            c2[j] -= p;
            if (all.insert(c2).second) work.push(c2);
        }
    }

    std::vector<Coord> pos;
    for (const auto& c : all)
        if (std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; }) && coord_height(c) > 0)
            pos.push_back(c);
    std::sort(pos.begin(), pos.end(), graded_lex_less);

    for (const auto& c : pos) {
        PositiveRoot r;
        r.root = c;
        r.weight = from_root_coords(c);
        positive_roots_.push_back(std::move(r));
    }

    // Coroot of beta = sum c_i alpha_i: beta^vee = sum c_i (2 d_i / (beta,beta)) alpha_i^vee.
    for (const auto& pr : positive_roots_) {
        BigRat len2 = 0;  // (beta, beta)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                len2 += BigRat(pr.root[i]) * BigRat(pr.root[j]) * sym_[j] * BigRat(cartan_[i][j]);
        PositiveCoroot cr;
        cr.coroot.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            cr.coroot[i] = to_i64(to_integer(BigRat(pr.root[i]) * 2 * sym_[i] / len2, "coroot coordinate"));
        // fundamental-coweight coordinates: <alpha_k, beta^vee> = column action
        cr.coweight.fund.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            long long v = 0;
            for (std::size_t i = 0; i < n; ++i) v += cartan_[k][i] * cr.coroot[i];
            cr.coweight.fund[k] = v;
        }
        positive_coroots_.push_back(std::move(cr));
    }

    // Simple reflections on fundamental-weight coordinates:
    // (s_j w)_k = w_k - w_j * cartan(j, k).
    refl_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix m = int_identity(n);
        for (std::size_t k = 0; k < n; ++k) m[k][j] -= cartan_[j][k];
        refl_[j] = std::move(m);
    }
}

Weight RootDatum::simple_root(std::size_t i) const {
    Coord c(rank(), 0);
    c[i] = 1;
    return from_root_coords(c);
}

Coweight RootDatum::simple_coroot(std::size_t i) const {
    Coweight c;
    c.fund.resize(rank());
    for (std::size_t k = 0; k < rank(); ++k) c.fund[k] = cartan_[k][i];
    return c;
}

Weight RootDatum::highest_root() const {
    return positive_roots_.back().weight;
}

BigRat RootDatum::form(const Weight& a, const Weight& b) const {
    // (a, b) = sum_j c_j(b) d_j a_j where c(b) are simple-root coordinates.
    const auto cb = to_root_coords(b);
    BigRat r = 0;
    for (std::size_t j = 0; j < rank(); ++j) r += cb[j] * sym_[j] * BigRat(a.fund[j]);
    return r;
}

std::vector<BigRat> RootDatum::to_root_coords(const Weight& w) const {
    // fund = cartan^T root_coords, so root_coords = cartan^{-T} fund.
    const std::size_t n = rank();
    std::vector<BigRat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = w.fund[i];
    return cartan_inv_.transposed().apply(rhs);
}

bool RootDatum::root_lattice_coords(const Weight& w, Coord& out) const {
    const auto rc = to_root_coords(w);
    out.assign(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (!is_integer(rc[i])) return false;
        out[i] = to_i64(rat_num(rc[i]));
    }
    return true;
}

Weight RootDatum::from_root_coords(const Coord& c) const {
    Weight w;
    w.fund.resize(rank());
    for (std::size_t k = 0; k < rank(); ++k) {
        long long v = 0;
        for (std::size_t i = 0; i < rank(); ++i) v += c[i] * cartan_[i][k];
        w.fund[k] = v;
    }
    return w;
}

RootDatum build_root_system(CartanType type) { return RootDatum(type); }

BigRat pairing(const RootDatum& datum, const Weight& w, const Coweight& c) {
    if (w.rank() != datum.rank() || c.rank() != datum.rank())
        throw std::invalid_argument("pairing: rank mismatch");
    // <omega_i, omega_j^vee> = (cartan^{-1})_{ij}
    BigRat r = 0;
    for (std::size_t i = 0; i < datum.rank(); ++i) {
        if (w.fund[i] == 0) continue;
        for (std::size_t j = 0; j < datum.rank(); ++j)
            if (c.fund[j] != 0) r += BigRat(w.fund[i]) * datum.cartan_inverse()(i, j) * BigRat(c.fund[j]);
    }
    return r;
}

BigInt pairing_int(const RootDatum& datum, const Weight& w, const Coweight& c) {
    return to_integer(pairing(datum, w, c), "pairing");
}

Weight rho(const RootDatum& datum) {
    return Weight(Coord(datum.rank(), 1));
}

bool rho_check(const RootDatum& datum) {
    Coord total(datum.rank(), 0);
    for (const auto& pr : datum.positive_roots())
        for (std::size_t k = 0; k < datum.rank(); ++k) total[k] += pr.weight.fund[k];
    const Weight two_rho = rho(datum).scaled(2);
    return total == two_rho.fund;
}

Coweight rho_coweight(const RootDatum& datum) {
    return Coweight(Coord(datum.rank(), 1));
}

bool is_dominant(const RootDatum&, const Weight& w) {
    return std::all_of(w.fund.begin(), w.fund.end(), [](long long x) { return x >= 0; });
}

bool is_dominant(const RootDatum&, const Coweight& c) {
    return std::all_of(c.fund.begin(), c.fund.end(), [](long long x) { return x >= 0; });
}

Weight apply_simple_reflection(const RootDatum& datum, std::size_t j, const Weight& w) {
    Weight r = w;
    const long long wj = w.fund[j];
    for (std::size_t k = 0; k < datum.rank(); ++k) r.fund[k] -= wj * datum.cartan(j, k);
    return r;
}

Coweight apply_simple_reflection(const RootDatum& datum, std::size_t j, const Coweight& c) {
    Coweight r = c;
    const long long cj = c.fund[j];
    for (std::size_t k = 0; k < datum.rank(); ++k) r.fund[k] -= cj * datum.cartan(k, j);
    return r;
}

Weight act(const WeylElement& w, const Weight& wt) {
    return Weight(int_apply(w.mat, wt.fund));
}

Coweight act_on_coweight(const RootDatum& datum, const WeylElement& w, const Coweight& c) {
    // Transform so that pairing(act(w, x), result) == pairing(x, c) for all x.
    // With pairing = x^T A^{-1} c this means  c' = A W^{-T} A^{-1} c.
    const std::size_t n = datum.rank();
    RatMatrix m(n, n), a(n, n), ainv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = w.mat[i][j];
            a(i, j) = datum.cartan(i, j);
            ainv(i, j) = datum.cartan_inverse()(i, j);
        }
    RatMatrix full = a * m.inverse().transposed() * ainv;
    std::vector<BigRat> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = c.fund[i];
    const auto r = full.apply(v);
    Coweight out;
    out.fund.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.fund[i] = to_i64(to_integer(r[i], "coweight coordinate"));
    return out;
}

std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& w) {
    std::set<Weight> seen{w};
    std::queue<Weight> q;
    q.push(w);
    while (!q.empty()) {
        const Weight cur = q.front();
        q.pop();
        for (std::size_t j = 0; j < datum.rank(); ++j) {
            Weight nxt = apply_simple_reflection(datum, j, cur);
            if (seen.insert(nxt).second) q.push(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

DominantRep dominant_representative(const RootDatum& datum, const Weight& w) {
    DominantRep rep;
    rep.weight = w;
    while (true) {
        std::size_t j = datum.rank();
        for (std::size_t i = 0; i < datum.rank(); ++i)
            if (rep.weight.fund[i] < 0) {
                j = i;
                break;
            }
        if (j == datum.rank()) break;
        rep.weight = apply_simple_reflection(datum, j, rep.weight);
        rep.word.push_back(j);
    }
    // word currently maps input -> dominant; invert order so that applying it
    // to the dominant representative reproduces the input.
    std::reverse(rep.word.begin(), rep.word.end());
    return rep;
}

Weight apply_word(const RootDatum& datum, const std::vector<std::size_t>& word, const Weight& w) {
    Weight r = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_simple_reflection(datum, *it, r);
    return r;
}

CoweightDominantRep dominant_representative(const RootDatum& datum, const Coweight& c) {
    CoweightDominantRep rep;
    rep.coweight = c;
    while (true) {
        std::size_t j = datum.rank();
        for (std::size_t i = 0; i < datum.rank(); ++i)
            if (rep.coweight.fund[i] < 0) {
                j = i;
                break;
            }
        if (j == datum.rank()) break;
        rep.coweight = apply_simple_reflection(datum, j, rep.coweight);
        rep.word.push_back(j);
    }
    std::reverse(rep.word.begin(), rep.word.end());
    return rep;
}

std::vector<WeylElement> full_weyl_group(const RootDatum& datum, std::uint64_t max_order) {
    const BigInt order = weyl_order_formula(datum.type());
    if (order > max_order)
        throw std::domain_error("Weyl group of " + datum.type().str() + " has order " + order.str() +
                                ", above the enumeration cap " + std::to_string(max_order));
    std::set<IntMatrix> seen;
    std::queue<IntMatrix> q;
    seen.insert(int_identity(datum.rank()));
    q.push(int_identity(datum.rank()));
    while (!q.empty()) {
        IntMatrix cur = q.front();
        q.pop();
        for (std::size_t j = 0; j < datum.rank(); ++j) {
            IntMatrix nxt = int_mul(datum.simple_reflection(j), cur);
            if (seen.insert(nxt).second) q.push(nxt);
        }
    }
    std::vector<WeylElement> out;
    out.reserve(seen.size());
    for (auto& m : seen) out.push_back(WeylElement{m});
    return out;
}

BigInt weyl_order_formula(CartanType t) {
    auto factorial = [](int n) {
        BigInt r = 1;
        for (int i = 2; i <= n; ++i) r *= i;
        return r;
    };
    auto pow2 = [](int n) {
        BigInt r = 1;
        for (int i = 0; i < n; ++i) r *= 2;
        return r;
    };
    switch (t.family) {
        case 'A': return factorial(t.rank + 1);
        case 'B':
        case 'C': return pow2(t.rank) * factorial(t.rank);
        case 'D': return pow2(t.rank - 1) * factorial(t.rank);
        case 'G': return 12;
        case 'F': return 1152;
        case 'E':
            if (t.rank == 6) return 51840;
            if (t.rank == 7) return 2903040;
            return BigInt(696729600);
    }
    throw std::invalid_argument("unknown family");
}

std::size_t weyl_length(const RootDatum& datum, const WeylElement& w) {
    std::size_t len = 0;
    for (const auto& pr : datum.positive_roots()) {
        const Weight img = act(w, pr.weight);
        // A root is negative iff its root coordinates are all <= 0; testing
        // one nonzero fundamental pairing against the dominance chamber is not
        // enough, so convert.
        Coord rc;
        if (!datum.root_lattice_coords(img, rc)) throw std::logic_error("root image off the root lattice");
        const bool negative = std::all_of(rc.begin(), rc.end(), [](long long x) { return x <= 0; });
        if (negative) ++len;
    }
    return len;
}

int weyl_sign(const WeylElement& w) {
    const long long d = int_det(w.mat);
    if (d != 1 && d != -1) throw std::logic_error("Weyl matrix determinant not +-1");
    return static_cast<int>(d);
}

}  // namespace hecke
