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

// Binary field towers GF(2^m) for m <= 32 in polynomial basis. Elements are
// bitmasks (bit i = coefficient of x^i), moduli are deterministic: the
// lexicographically least irreducible of the requested degree with nonzero
// constant term, so every construction is reproducible bit for bit.

#ifndef OACR_GF2M_HPP
#define OACR_GF2M_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oacr {

using FieldElement = std::uint64_t;

namespace gf2detail {

inline int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        p >>= 1;
        ++d;
    }
    return d;
}

// a * b mod p in GF(2)[x], deg p = m, operands reduced
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p, int m) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m) a ^= p;
    }
    return r;
}

inline std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
    int dp = poly_degree(p);
    int da = poly_degree(a);
    while (da >= dp) {
        a ^= p << (da - dp);
        da = poly_degree(a);
    }
    return a;
}

inline std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = poly_mod(a, b);
        a = b;
        b = t;
    }
    return a;
}

// Rabin's criterion: p of degree d is irreducible iff x^{2^d} = x mod p and
// gcd(x^{2^{d/q}} - x, p) = 1 for every prime q dividing d
inline bool irreducible(std::uint64_t p) {
    int d = poly_degree(p);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((p & 1) == 0) return false; // divisible by x
    auto frob = [&](std::uint64_t x, int times) {
        for (int i = 0; i < times; ++i) x = mul_mod(x, x, p, d);
        return x;
    };
    if (frob(2, d) != 2) return false;
    int rem = d;
    for (int q = 2; q * q <= rem; ++q) {
        if (rem % q) continue;
        while (rem % q == 0) rem /= q;
        if (poly_gcd(frob(2, d / q) ^ 2u, p) != 1) return false;
    }
    if (rem > 1 && rem != d)
        if (poly_gcd(frob(2, d / rem) ^ 2u, p) != 1) return false;
    return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace gf2detail

inline bool is_irreducible_gf2(std::uint64_t poly) { return gf2detail::irreducible(poly); }

class FieldSpec {
  public:
    FieldSpec(int m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
        if (m < 1 || m > 32) throw std::invalid_argument("FieldSpec: need 1 <= m <= 32");
        if (gf2detail::poly_degree(modulus) != m || !gf2detail::irreducible(modulus))
            throw std::invalid_argument("FieldSpec: modulus not irreducible of degree m");
    }

    int m() const { return m_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t group_order() const { return (m_ == 32 ? 0xFFFFFFFFull : (1ull << m_) - 1); }

    FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }
    FieldElement mul(FieldElement a, FieldElement b) const {
        return gf2detail::mul_mod(a, b, modulus_, m_);
    }

    // 0^0 = 1 by convention, 0^e = 0 for e > 0
    FieldElement pow(FieldElement a, std::uint64_t e) const {
        FieldElement r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElement inverse(FieldElement a) const {
        if (a == 0) throw std::domain_error("FieldSpec: inverse of zero");
        return pow(a, group_order() - 1);
    }

    std::uint64_t element_order(FieldElement a) const {
        if (a == 0) throw std::domain_error("FieldSpec: order of zero");
        std::uint64_t ord = group_order();
        for (std::uint64_t q : gf2detail::distinct_prime_factors(ord))
            while (ord % q == 0 && pow(a, ord / q) == 1) ord /= q;
        return ord;
    }

  private:
    int m_;
    std::uint64_t modulus_;
};

// least irreducible of degree m with nonzero constant term when no modulus
// is supplied
inline FieldSpec field(int m, std::optional<std::uint64_t> modulus = std::nullopt) {
    if (modulus) return FieldSpec(m, *modulus);
    if (m < 1 || m > 32) throw std::invalid_argument("field: need 1 <= m <= 32");
    for (std::uint64_t p = (1ull << m) | 1;; p += 2)
        if (gf2detail::irreducible(p)) return FieldSpec(m, p);
}

// smallest element (as a bitmask) of full multiplicative order
inline FieldElement primitive_element(const FieldSpec& F) {
    for (FieldElement a = 1;; ++a) {
        if (a > F.group_order()) throw std::logic_error("primitive_element: search exhausted");
        if (F.element_order(a) == F.group_order()) return a;
    }
}

// sum of x^{2^{small_m i}}; lands in the degree-small_m subfield, still
// written in the big field's basis (0 or 1 when small_m = 1)
inline FieldElement trace(const FieldSpec& F, int small_m, FieldElement x) {
    if (small_m < 1 || F.m() % small_m != 0)
        throw std::invalid_argument("trace: subfield degree must divide m");
    FieldElement acc = 0, term = x;
    for (int i = 0; i < F.m() / small_m; ++i) {
        acc ^= term;
        for (int j = 0; j < small_m; ++j) term = F.mul(term, term);
    }
    return acc;
}

inline int trace_bit(const FieldSpec& F, FieldElement x) {
    return static_cast<int>(trace(F, 1, x));
}

// product over the conjugacy class {beta^{2^i}}; the coefficients collapse
// into GF(2) and the result is irreducible with beta as a root
inline std::uint64_t minimal_polynomial(const FieldSpec& F, FieldElement beta) {
    if (beta == 0) throw std::invalid_argument("minimal_polynomial: zero element");
    std::vector<FieldElement> conj;
    FieldElement c = beta;
    do {
        conj.push_back(c);
        c = F.mul(c, c);
    } while (c != beta);
    std::vector<FieldElement> coeffs{1}; // leading first is easier to build
    for (FieldElement r : conj) {
        std::vector<FieldElement> next(coeffs.size() + 1, 0);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i] ^= coeffs[i]; // times x
            next[i + 1] ^= F.mul(coeffs[i], r);
        }
        coeffs = std::move(next);
    }
    std::uint64_t mask = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw std::logic_error("minimal_polynomial: coefficient escaped GF(2)");
        if (coeffs[i]) mask |= 1ull << (coeffs.size() - 1 - i);
    }
    return mask;
}

struct CyclotomicCoset {
    long leader = 0;
    std::vector<long> members;
};

// closure of s under doubling mod n_mod
inline CyclotomicCoset cyclotomic_coset(long n_mod, long s) {
    if (n_mod < 1 || n_mod % 2 == 0)
        throw std::invalid_argument("cyclotomic_coset: modulus must be odd and positive");
    CyclotomicCoset out;
    long c = ((s % n_mod) + n_mod) % n_mod;
    long start = c;
    do {
        out.members.push_back(c);
        c = (2 * c) % n_mod;
    } while (c != start);
    std::sort(out.members.begin(), out.members.end());
    out.leader = out.members.front();
    return out;
}

struct UnitCircle {
    FieldSpec field;
    FieldElement theta; // order 2^{2m} + 1
};

// element of order 2^{2m}+1 inside GF(2^{4m}), as the (2^{2m}-1)-th power of
// a primitive element; it cannot lie in the GF(2^{2m}) subfield
inline UnitCircle unit_circle_generator(int m) {
    if (m < 2 || m > 8) throw std::invalid_argument("unit_circle_generator: need 2 <= m <= 8");
    FieldSpec F = field(4 * m);
    FieldElement g = primitive_element(F);
    std::uint64_t q = 1ull << (2 * m);
    FieldElement theta = F.pow(g, F.group_order() / (q + 1));
    if (F.element_order(theta) != q + 1)
        throw std::logic_error("unit_circle_generator: order check failed");
    if (F.pow(theta, q) == theta)
        throw std::logic_error("unit_circle_generator: fell into the subfield");
    return {F, theta};
}

} // namespace oacr

#endif
