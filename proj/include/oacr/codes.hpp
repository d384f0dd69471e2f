/*
   Copyright 2026 the oacr authors

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

// Binary linear codes with exact combinatorial invariants: duals, minimum
// distance, covering radius by syndrome breadth-first search, distance
// distributions, orthogonal-array strength, and deep-hole classification.
// Everything is enumeration-based and exact; size guards throw instead of
// approximating.

#ifndef OACR_CODES_HPP
#define OACR_CODES_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <oacr/krawtchouk.hpp>
#include <oacr/polynomial.hpp>
#include <oacr/rational.hpp>

namespace oacr {

// fixed-length bit vector; word 0 holds coordinates 0..63
class BitVec {
  public:
    BitVec() : n_(0) {}
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("BitVec: negative length");
    }

    int size() const { return n_; }
    bool get(int i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    void set(int i, bool v) {
        std::uint64_t mask = 1ull << (i % 64);
        if (v)
            w_[i / 64] |= mask;
        else
            w_[i / 64] &= ~mask;
    }
    void flip(int i) { w_[i / 64] ^= 1ull << (i % 64); }

    BitVec& operator^=(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    int weight() const {
        int c = 0;
        for (std::uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVec& o) const { return w_ < o.w_; }

    BitVec complemented() const {
        BitVec r(*this);
        for (int i = 0; i < n_; ++i) r.flip(i);
        return r;
    }

    std::string str() const {
        std::string s(n_, '0');
        for (int i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }
    static BitVec parse(const std::string& s) {
        BitVec v((int)s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set((int)i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVec::parse: characters must be 0/1");
        }
        return v;
    }

  private:
    int n_;
    std::vector<std::uint64_t> w_;
};

inline int hamming_distance(const BitVec& a, const BitVec& b) { return (a ^ b).weight(); }

namespace codedetail {

// row-reduce in place; returns pivot columns, drops zero rows
inline std::vector<int> rref(std::vector<BitVec>& rows, int n) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int col = 0; col < n && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

} // namespace codedetail

class BinaryLinearCode {
  public:
    BinaryLinearCode(int n, std::vector<BitVec> rows) : n_(n) {
        if (n < 1) throw std::invalid_argument("BinaryLinearCode: length must be positive");
        for (const BitVec& row : rows)
            if (row.size() != n)
                throw std::invalid_argument("BinaryLinearCode: row length mismatch");
        pivots_ = codedetail::rref(rows, n);
        gen_ = std::move(rows);
    }

    int n() const { return n_; }
    int dim() const { return (int)gen_.size(); }
    Int size() const { return pow2_int((unsigned)dim()); }
    const std::vector<BitVec>& generator() const { return gen_; }

    // membership: reduce against the RREF rows
    bool contains(BitVec v) const {
        for (size_t r = 0; r < gen_.size(); ++r)
            if (v.get(pivots_[r])) v ^= gen_[r];
        return !v.any();
    }

    bool operator==(const BinaryLinearCode& o) const {
        return n_ == o.n_ && gen_ == o.gen_; // RREF is canonical for the row space
    }

  private:
    int n_;
    std::vector<BitVec> gen_;
    std::vector<int> pivots_;
};

// nullspace basis from the RREF structure: one row per free column
inline BinaryLinearCode dual(const BinaryLinearCode& c) {
    int n = c.n();
    const std::vector<BitVec>& g = c.generator();
    std::vector<int> pivots;
    {
        std::vector<bool> is_pivot(n, false);
        size_t r = 0;
        for (int col = 0; col < n && r < g.size(); ++col)
            if (g[r].get(col)) {
                is_pivot[col] = true;
                pivots.push_back(col);
                ++r;
            }
        std::vector<BitVec> rows;
        for (int col = 0; col < n; ++col) {
            if (is_pivot[col]) continue;
            BitVec v(n);
            v.set(col, true);
            for (size_t i = 0; i < pivots.size(); ++i)
                if (g[i].get(col)) v.set(pivots[i], true);
            rows.push_back(v);
        }
        return BinaryLinearCode(n, std::move(rows));
    }
}

// g must divide x^n + 1; bitmasks use bit i for the coefficient of x^i
inline BinaryLinearCode cyclic_code(int n, const Int& g) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("cyclic_code: length must be odd");
    if (g == 0) throw std::invalid_argument("cyclic_code: zero generator polynomial");
    int deg = (int)boost::multiprecision::msb(g);
    if (deg > n) throw std::invalid_argument("cyclic_code: generator degree exceeds length");
    // long-divide x^n + 1 by g and insist on remainder zero
    Int rem = (Int(1) << n) | 1;
    while (rem != 0 && (int)boost::multiprecision::msb(rem) >= deg) {
        rem ^= g << ((int)boost::multiprecision::msb(rem) - deg);
    }
    if (rem != 0) throw std::invalid_argument("cyclic_code: generator must divide x^n + 1");
    std::vector<BitVec> rows;
    for (int s = 0; s + deg < n; ++s) {
        BitVec row(n);
        for (int i = 0; i <= deg; ++i)
            if (boost::multiprecision::bit_test(g, (unsigned)i)) row.set(s + i, true);
        rows.push_back(row);
    }
    if (rows.empty()) { // g = x^n + 1 would be the zero code; exclude via deg > n check path
        BitVec row(n);
        rows.push_back(row);
    }
    return BinaryLinearCode(n, std::move(rows));
}

namespace codedetail {

// visit all nonzero codewords in Gray order: one row xor per step
template <class Visit>
inline void for_each_nonzero_codeword(const BinaryLinearCode& c, Visit&& visit) {
    int k = c.dim();
    if (k == 0) return;
    if (k > 24) throw std::domain_error("codeword enumeration: dimension exceeds 24");
    BitVec cur(c.n());
    std::uint32_t gray = 0;
    std::uint32_t total = 1u << k;
    for (std::uint32_t step = 1; step < total; ++step) {
        std::uint32_t next = step ^ (step >> 1);
        std::uint32_t bit = gray ^ next;
        int idx = __builtin_ctz(bit);
        cur ^= c.generator()[idx];
        gray = next;
        visit(cur);
    }
}

inline std::vector<Int> weight_distribution_direct(const BinaryLinearCode& c) {
    std::vector<Int> w(c.n() + 1, 0);
    w[0] = 1;
    for_each_nonzero_codeword(c, [&](const BitVec& x) { w[x.weight()] += 1; });
    return w;
}

// dual weight transform: |C| A_j = sum_i B_i K_j(i) with the integer-valued
// Krawtchouk kernel K_j(i) = sum_s (-1)^s binom(i,s) binom(n-i,j-s)
inline Int kraw_int(int n, int j, int i) {
    Int acc = 0;
    for (int s = 0; s <= std::min(i, j); ++s) {
        Int term = binomial(i, s) * binomial(n - i, j - s);
        acc += (s % 2 == 0) ? term : -term;
    }
    return acc;
}

inline std::vector<Int> weight_distribution_via_dual(const BinaryLinearCode& c) {
    BinaryLinearCode d = dual(c);
    std::vector<Int> b = weight_distribution_direct(d);
    int n = c.n();
    Int dual_size = pow2_int((unsigned)d.dim());
    std::vector<Int> a(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        Int acc = 0;
        for (int i = 0; i <= n; ++i)
            if (b[i] != 0) acc += b[i] * kraw_int(n, j, i);
        if (acc % dual_size != 0)
            throw std::logic_error("weight distribution transform: non-integer count");
        a[j] = acc / dual_size;
    }
    return a;
}

} // namespace codedetail

// exact weight distribution, from whichever side is enumerable
inline std::vector<Int> weight_distribution(const BinaryLinearCode& c) {
    if (c.dim() <= 24) return codedetail::weight_distribution_direct(c);
    if (c.n() - c.dim() <= 24) return codedetail::weight_distribution_via_dual(c);
    throw std::domain_error("weight_distribution: instance too large");
}

inline int min_distance(const BinaryLinearCode& c) {
    std::vector<Int> w = weight_distribution(c);
    for (int i = 1; i <= c.n(); ++i)
        if (w[i] != 0) return i;
    throw std::domain_error("min_distance: code has no nonzero codeword");
}

// strength of the codebook read as an orthogonal array; the full space has
// no nonzero dual word and degenerates to tau = n
inline int strength(const BinaryLinearCode& oa) {
    BinaryLinearCode d = dual(oa);
    if (d.dim() == 0) return oa.n();
    return min_distance(d) - 1;
}

namespace codedetail {

// parity-check columns as syndrome masks, from the dual generator
inline std::vector<std::uint32_t> syndrome_columns(const BinaryLinearCode& c,
                                                   const BinaryLinearCode& d) {
    std::vector<std::uint32_t> cols(c.n(), 0);
    for (int j = 0; j < c.n(); ++j)
        for (int r = 0; r < d.dim(); ++r)
            if (d.generator()[r].get(j)) cols[j] |= 1u << r;
    return cols;
}

// first-reach weights over the syndrome graph; index 0 is the code itself
inline std::vector<std::uint8_t> coset_leader_weights(const BinaryLinearCode& c) {
    BinaryLinearCode d = dual(c);
    int red = d.dim();
    if (red > 24) throw std::domain_error("covering radius: syndrome space exceeds 2^24");
    std::vector<std::uint32_t> cols = syndrome_columns(c, d);
    std::vector<std::uint8_t> dist(1u << red, 0xFF);
    dist[0] = 0;
    std::vector<std::uint32_t> frontier{0};
    std::uint8_t level = 0;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t s : frontier)
            for (std::uint32_t col : cols) {
                std::uint32_t t = s ^ col;
                if (dist[t] == 0xFF) {
                    dist[t] = level + 1;
                    next.push_back(t);
                }
            }
        frontier = std::move(next);
        ++level;
    }
    return dist;
}

} // namespace codedetail

inline int covering_radius_exact(const BinaryLinearCode& c) {
    std::vector<std::uint8_t> dist = codedetail::coset_leader_weights(c);
    std::uint8_t mx = 0;
    for (std::uint8_t v : dist) mx = std::max(mx, v);
    return mx;
}

struct DistanceDistribution {
    BitVec y;
    std::vector<Int> counts; // counts[i] = codewords at distance i from y
};

inline DistanceDistribution distance_distribution(const BinaryLinearCode& c, const BitVec& y) {
    if (y.size() != c.n())
        throw std::invalid_argument("distance_distribution: point length mismatch");
    DistanceDistribution out;
    out.y = y;
    out.counts.assign(c.n() + 1, 0);
    BitVec zero(c.n());
    out.counts[hamming_distance(zero, y)] += 1;
    codedetail::for_each_nonzero_codeword(
        c, [&](const BitVec& x) { out.counts[hamming_distance(x, y)] += 1; });
    return out;
}

// checks sum_i w_i f(t_{n-i}) = f_0 M exactly; guaranteed when
// deg f <= strength, still evaluated (and reported) past that
inline bool delsarte_identity_check(const BinaryLinearCode& c, const BitVec& y,
                                    const RationalPoly& f) {
    DistanceDistribution dd = distance_distribution(c, y);
    int n = c.n();
    Rational lhs(0);
    for (int i = 0; i <= n; ++i)
        if (dd.counts[i] != 0) lhs += Rational(dd.counts[i]) * f.eval(Rational(n - 2 * i, n));
    KrawtchoukBasis b(n, 0);
    Rational rhs = b.mean(f) * Rational(c.size());
    return lhs == rhs;
}

struct DeepHoleReport {
    int radius = 0;
    std::vector<BitVec> deep_holes; // first `limit` of them
    Int total_count = 0;
    bool all_antipodal = false;
    std::optional<BitVec> witness; // a deep hole whose antipode misses the code
};

// full 2^n sweep in Gray order with syndrome updates
inline DeepHoleReport deep_holes(const BinaryLinearCode& c, int limit = 16) {
    int n = c.n();
    if (n > 24) throw std::domain_error("deep_holes: full point enumeration capped at n = 24");
    BinaryLinearCode d = dual(c);
    std::vector<std::uint8_t> leader = codedetail::coset_leader_weights(c);
    std::vector<std::uint32_t> cols = codedetail::syndrome_columns(c, d);
    std::uint8_t radius = 0;
    for (std::uint8_t v : leader) radius = std::max(radius, v);

    std::uint32_t ones_syndrome = 0;
    for (std::uint32_t col : cols) ones_syndrome ^= col;

    DeepHoleReport rep;
    rep.radius = radius;
    rep.all_antipodal = true;
    BitVec cur(n);
    std::uint32_t gray = 0, syn = 0;
    std::uint64_t total = 1ull << n;
    auto consider = [&](const BitVec& y, std::uint32_t s) {
        if (leader[s] != radius) return;
        rep.total_count += 1;
        if ((int)rep.deep_holes.size() < limit) rep.deep_holes.push_back(y);
        // antipode membership is a syndrome test
        if ((s ^ ones_syndrome) != 0) {
            rep.all_antipodal = false;
            if (!rep.witness) rep.witness = y;
        }
    };
    consider(cur, syn);
    for (std::uint64_t step = 1; step < total; ++step) {
        std::uint64_t next = step ^ (step >> 1);
        int idx = __builtin_ctzll(gray ^ (std::uint32_t)next);
        cur.flip(idx);
        syn ^= cols[idx];
        gray = (std::uint32_t)next;
        consider(cur, syn);
    }
    return rep;
}

// independent oracle: direct max-min distance over the whole space
inline int covering_radius_full_space(const BinaryLinearCode& c) {
    int n = c.n();
    if (n > 20) throw std::domain_error("covering_radius_full_space: n capped at 20");
    std::vector<BitVec> words;
    words.push_back(BitVec(n));
    codedetail::for_each_nonzero_codeword(c, [&](const BitVec& x) { words.push_back(x); });
    int radius = 0;
    for (std::uint64_t y = 0; y < (1ull << n); ++y) {
        BitVec p(n);
        for (int i = 0; i < n; ++i)
            if ((y >> i) & 1) p.set(i, true);
        int best = n + 1;
        for (const BitVec& x : words) best = std::min(best, hamming_distance(x, p));
        radius = std::max(radius, best);
    }
    return radius;
}

// definition-level check: every tau-column projection hits each pattern
// exactly M / 2^tau times
inline bool verify_oa_definition(const BinaryLinearCode& c, int tau) {
    int n = c.n();
    if (n > 12) throw std::domain_error("verify_oa_definition: capped at n = 12");
    if (tau < 0 || tau > n) throw std::invalid_argument("verify_oa_definition: bad tau");
    if (tau == 0) return true;
    Int m = c.size();
    if (m % pow2_int((unsigned)tau) != 0) return false;
    Int lambda = m / pow2_int((unsigned)tau);

    std::vector<BitVec> words;
    words.push_back(BitVec(n));
    codedetail::for_each_nonzero_codeword(c, [&](const BitVec& x) { words.push_back(x); });

    std::vector<int> pick(tau);
    for (int i = 0; i < tau; ++i) pick[i] = i;
    while (true) {
        std::vector<Int> counts(1u << tau, 0);
        for (const BitVec& x : words) {
            std::uint32_t pat = 0;
            for (int i = 0; i < tau; ++i)
                if (x.get(pick[i])) pat |= 1u << i;
            counts[pat] += 1;
        }
        for (const Int& cnt : counts)
            if (cnt != lambda) return false;
        int i = tau - 1;
        while (i >= 0 && pick[i] == n - tau + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < tau; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
}

// text form: "n dim" header then generator rows as 0/1 strings
inline void write_code(std::ostream& os, const BinaryLinearCode& c) {
    os << c.n() << ' ' << c.dim() << '\n';
    for (const BitVec& row : c.generator()) os << row.str() << '\n';
}

inline BinaryLinearCode read_code(std::istream& is) {
    int n = 0, k = 0;
    if (!(is >> n >> k)) throw std::invalid_argument("read_code: missing header");
    std::vector<BitVec> rows;
    for (int i = 0; i < k; ++i) {
        std::string line;
        if (!(is >> line)) throw std::invalid_argument("read_code: missing generator row");
        if ((int)line.size() != n) throw std::invalid_argument("read_code: row length mismatch");
        rows.push_back(BitVec::parse(line));
    }
    BinaryLinearCode c(n, std::move(rows));
    if (c.dim() != k) throw std::invalid_argument("read_code: rows not independent");
    return c;
}

} // namespace oacr

#endif
