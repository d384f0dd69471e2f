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

// Three families of binary orthogonal arrays built as duals of cyclic codes
// (narrow-sense BCH, Melas, Zetterberg), with their closed-form covering
// radius lower bounds and the exponential-sum counting oracles that certify
// those bounds by brute force.

#ifndef OACR_FAMILIES_HPP
#define OACR_FAMILIES_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include <oacr/codes.hpp>
#include <oacr/gf2m.hpp>
#include <oacr/quadfield.hpp>
#include <oacr/rational.hpp>

namespace oacr {

enum class FamilyKind { BCH, Melas, Zetterberg };

struct ConstructionParams {
    FamilyKind family;
    int e = 1;
    int m = 0;
    int n = 0;
    Int expected_M;
    int expected_tau = 0;

    static ConstructionParams bch(int e, int m) {
        ConstructionParams p{FamilyKind::BCH, e, m, (1 << m) - 1, pow2_int((unsigned)(m * e)),
                             2 * e};
        return p;
    }
    static ConstructionParams melas(int m) {
        ConstructionParams p{FamilyKind::Melas, 1, m, (1 << m) - 1, pow2_int((unsigned)(2 * m)),
                             m % 2 == 0 ? 2 : 4};
        return p;
    }
    static ConstructionParams zetterberg(int m) {
        ConstructionParams p{FamilyKind::Zetterberg, 1, m, (1 << (2 * m)) + 1,
                             pow2_int((unsigned)(4 * m)), 4};
        return p;
    }
};

// no proper divisor m1 of m may satisfy (2^m - 1) | (2j - 1)(2^{m1} - 1);
// equivalently no theta^{2j-1} falls into a proper subfield
inline bool check_P1(int e, int m) {
    if (e < 1 || m < 1) throw std::invalid_argument("check_P1: need e, m >= 1");
    Int full = pow2_int((unsigned)m) - 1;
    for (int j = 1; j <= e; ++j)
        for (int m1 = 1; m1 < m; ++m1) {
            if (m % m1 != 0) continue;
            Int prod = Int(2 * j - 1) * (pow2_int((unsigned)m1) - 1);
            if (prod % full == 0) return false;
        }
    return true;
}

// sum_{i=0}^{e+1} binom(2^m - 1, i) must exceed 2^{me}
inline bool check_P2(int e, int m) {
    if (e < 1 || m < 1) throw std::invalid_argument("check_P2: need e, m >= 1");
    Int n = pow2_int((unsigned)m) - 1;
    Int acc = 0;
    for (int i = 0; i <= e + 1; ++i) acc += binomial((long)n, i);
    return acc > pow2_int((unsigned)(m * e));
}

namespace famdetail {

inline Int gf2_poly_mul(const Int& a, const Int& b) {
    Int r = 0;
    if (a == 0 || b == 0) return 0;
    for (unsigned i = 0; i <= boost::multiprecision::msb(b); ++i)
        if (boost::multiprecision::bit_test(b, i)) r ^= a << i;
    return r;
}

// trace onto GF(2) through a subfield of the stated degree; the argument
// must lie in that subfield or the sum is not a bit
inline int subfield_trace_bit(const FieldSpec& F, int sub_m, FieldElement y) {
    FieldElement acc = 0, term = y;
    for (int i = 0; i < sub_m; ++i) {
        acc ^= term;
        term = F.mul(term, term);
    }
    if (acc > 1) throw std::logic_error("subfield_trace_bit: argument outside the subfield");
    return (int)acc;
}

} // namespace famdetail

// the cyclic code with generator g_1 g_3 ... g_{2e-1} (minimal polynomials
// of odd powers of a primitive root)
inline BinaryLinearCode bch_code(int e, int m) {
    if (!check_P1(e, m) || !check_P2(e, m))
        throw std::invalid_argument("bch_code: parameters must satisfy both counting properties");
    FieldSpec F = field(m);
    FieldElement theta = primitive_element(F);
    Int g = 1;
    for (int j = 1; j <= e; ++j)
        g = famdetail::gf2_poly_mul(g, Int(minimal_polynomial(F, F.pow(theta, 2 * j - 1))));
    return cyclic_code((1 << m) - 1, g);
}

inline BinaryLinearCode construct_bch_dual(int e, int m) { return dual(bch_code(e, m)); }

// generator = minpoly(theta) * minpoly(theta^{-1})
inline BinaryLinearCode melas_code(int m) {
    if (m < 4) throw std::invalid_argument("melas_code: need m >= 4");
    FieldSpec F = field(m);
    FieldElement theta = primitive_element(F);
    Int g = famdetail::gf2_poly_mul(Int(minimal_polynomial(F, theta)),
                                    Int(minimal_polynomial(F, F.inverse(theta))));
    return cyclic_code((1 << m) - 1, g);
}

inline BinaryLinearCode construct_melas_dual(int m) { return dual(melas_code(m)); }

// generator = minimal polynomial of an order-(2^{2m}+1) element
inline BinaryLinearCode zetterberg_code(int m) {
    UnitCircle uc = unit_circle_generator(m);
    Int g = Int(minimal_polynomial(uc.field, uc.theta));
    return cyclic_code((1 << (2 * m)) + 1, g);
}

inline BinaryLinearCode construct_zetterberg_dual(int m) { return dual(zetterberg_code(m)); }

struct FamilyLowerBound {
    long value = 0;  // the integer bound on the covering radius
    QuadExt raw;     // pre-rounding value, exact even when irrational
    int e = 1;
    int m = 0;
};

namespace famdetail {

inline long exact_ceil(const QuadExt& v) {
    if (v.is_rational()) return (long)ceil_rat(v.rational_value());
    RootEnclosure e = v.enclosure();
    e.refine_to(Rational(1, 4));
    long c = (long)ceil_rat(e.hi);
    while (v.compare_to(Rational(c - 1)) <= 0) --c;
    if (v.compare_to(Rational(c)) > 0) throw std::logic_error("exact_ceil: bracket failed");
    return c;
}

} // namespace famdetail

// 2^{m-1} - 1 - (e-1) 2^{m/2}, kept exact through the square root
inline FamilyLowerBound lower_bound_bch(int e, int m) {
    if (e < 1 || m < 1) throw std::invalid_argument("lower_bound_bch: need e, m >= 1");
    Rational a(pow2_int((unsigned)(m - 1)) - 1);
    QuadExt raw = m % 2 == 0
                      ? QuadExt(a - Rational((e - 1) * pow2_int((unsigned)(m / 2))))
                      : QuadExt(a, Rational(-(e - 1) * pow2_int((unsigned)((m - 1) / 2))), 2);
    return {famdetail::exact_ceil(raw), raw, e, m};
}

// ceil((2^m - 1 - floor(2^{m/2+1})) / 2)
inline FamilyLowerBound lower_bound_melas(int m) {
    if (m < 4) throw std::invalid_argument("lower_bound_melas: need m >= 4");
    Int fl = boost::multiprecision::sqrt(pow2_int((unsigned)(m + 2)));
    QuadExt raw(Rational(pow2_int((unsigned)m) - 1 - fl, 2));
    return {famdetail::exact_ceil(raw), raw, 1, m};
}

// 2^{2m-1} - 2^m + 1, already an integer
inline FamilyLowerBound lower_bound_zetterberg(int m) {
    if (m < 2) throw std::invalid_argument("lower_bound_zetterberg: need m >= 2");
    QuadExt raw(Rational(pow2_int((unsigned)(2 * m - 1)) - pow2_int((unsigned)m) + 1));
    return {famdetail::exact_ceil(raw), raw, 1, m};
}

// coordinate i carries Tr(f(theta^i)) for f = a_1 x + a_2 x^3 + ... over
// exponents 0..n-1
inline BitVec trace_codeword(const FieldSpec& F, const std::vector<FieldElement>& coeffs,
                             FieldElement theta) {
    int n = (int)F.element_order(theta);
    BitVec word(n);
    for (int i = 0; i < n; ++i) {
        FieldElement alpha = F.pow(theta, (std::uint64_t)i);
        FieldElement val = 0;
        for (size_t j = 0; j < coeffs.size(); ++j)
            val ^= F.mul(coeffs[j], F.pow(alpha, (std::uint64_t)(2 * j + 1)));
        if (trace_bit(F, val)) word.set(i, true);
    }
    return word;
}

// number of nonzero alpha with Tr(f(alpha)) = 0
inline long bch_point_count(const FieldSpec& F, const std::vector<FieldElement>& coeffs) {
    long count = 0;
    std::uint64_t size = 1ull << F.m();
    for (FieldElement alpha = 1; alpha < size; ++alpha) {
        FieldElement val = 0;
        for (size_t j = 0; j < coeffs.size(); ++j)
            val ^= F.mul(coeffs[j], F.pow(alpha, (std::uint64_t)(2 * j + 1)));
        if (trace_bit(F, val) == 0) ++count;
    }
    return count;
}

// number of nonzero alpha with Tr(a alpha + b / alpha) = 0
inline long melas_point_count(const FieldSpec& F, FieldElement a, FieldElement b) {
    long count = 0;
    std::uint64_t size = 1ull << F.m();
    for (FieldElement alpha = 1; alpha < size; ++alpha) {
        FieldElement val = F.mul(a, alpha) ^ F.mul(b, F.inverse(alpha));
        if (trace_bit(F, val) == 0) ++count;
    }
    return count;
}

// the order-(q+1) subgroup, q = 2^{2m}, as powers of the circle generator
inline std::vector<FieldElement> unit_circle_elements(const UnitCircle& uc) {
    std::uint64_t q = 1ull << (uc.field.m() / 2);
    std::vector<FieldElement> h;
    h.reserve(q + 1);
    FieldElement x = 1;
    for (std::uint64_t i = 0; i <= q; ++i) {
        h.push_back(x);
        x = uc.field.mul(x, uc.theta);
    }
    return h;
}

// nonzero elements of the index-2 subfield GF(q) inside GF(q^2)
inline std::vector<FieldElement> subfield_nonzero_elements(const UnitCircle& uc) {
    std::uint64_t q = 1ull << (uc.field.m() / 2);
    FieldElement g = primitive_element(uc.field);
    FieldElement w = uc.field.pow(g, q + 1); // generates the order-(q-1) subgroup
    std::vector<FieldElement> out;
    out.reserve(q - 1);
    FieldElement x = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
        out.push_back(x);
        x = uc.field.mul(x, w);
    }
    return out;
}

// count of h in the circle subgroup with full trace of a*h vanishing
inline long unit_circle_point_count(const UnitCircle& uc, FieldElement a) {
    long count = 0;
    for (FieldElement h : unit_circle_elements(uc))
        if (trace_bit(uc.field, uc.field.mul(a, h)) == 0) ++count;
    return count;
}

// count of x in the circle subgroup with Tr_{q/2}(a1 (x + 1/x)) = 0; the
// folded value x + 1/x always lands in the subfield
inline long unit_circle_symmetric_count(const UnitCircle& uc, FieldElement a1) {
    const FieldSpec& F = uc.field;
    int sub_m = F.m() / 2;
    long count = 0;
    for (FieldElement x : unit_circle_elements(uc)) {
        FieldElement val = F.mul(a1, x ^ F.inverse(x));
        if (famdetail::subfield_trace_bit(F, sub_m, val) == 0) ++count;
    }
    return count;
}

// verifies the multiset split of a1(x + 1/x) over the circle subgroup vs the
// subfield, and the resulting complementary point counts
inline bool partition_lemma_check(const UnitCircle& uc, FieldElement a1) {
    const FieldSpec& F = uc.field;
    int sub_m = F.m() / 2;
    std::uint64_t q = 1ull << sub_m;
    if (a1 == 0 || F.pow(a1, q) != a1)
        throw std::invalid_argument("partition_lemma_check: a1 must be a nonzero subfield element");

    std::map<FieldElement, long> s1, s2;
    for (FieldElement x : unit_circle_elements(uc)) s1[F.mul(a1, x ^ F.inverse(x))] += 1;
    for (FieldElement y : subfield_nonzero_elements(uc)) s2[F.mul(a1, y ^ F.inverse(y))] += 1;

    if (s1[0] != 1 || s2[0] != 1) return false;
    std::vector<FieldElement> supp1, supp2;
    for (const auto& [v, c] : s1)
        if (v != 0) {
            if (c != 2) return false;
            supp1.push_back(v);
        }
    for (const auto& [v, c] : s2)
        if (v != 0) {
            if (c != 2) return false;
            supp2.push_back(v);
        }
    if (supp1.size() != q / 2 || supp2.size() != q / 2 - 1) return false;
    for (FieldElement v : supp1)
        if (s2.count(v)) return false; // nonzero supports must be disjoint
    // sizes q/2 + (q/2 - 1) = q - 1 and disjointness force a partition of
    // the nonzero subfield

    long n1 = 1, n2 = 1;
    for (FieldElement u : supp1)
        if (famdetail::subfield_trace_bit(F, sub_m, u) == 0) n1 += 2;
    for (FieldElement v : supp2)
        if (famdetail::subfield_trace_bit(F, sub_m, v) == 0) n2 += 2;
    if (n1 != unit_circle_symmetric_count(uc, a1)) return false;
    return n1 + n2 == (long)q;
}

} // namespace oacr

#endif
