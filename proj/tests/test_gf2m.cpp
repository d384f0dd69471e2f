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

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include <oacr/gf2m.hpp>

using namespace oacr;

TEST_CASE("default moduli are the least lexicographic irreducibles") {
    CHECK(field(1).modulus() == 0b11);
    CHECK(field(2).modulus() == 0b111);
    CHECK(field(3).modulus() == 0b1011);
    CHECK(field(4).modulus() == 0b10011);
    CHECK(field(5).modulus() == 0b100101);
    CHECK(field(8).modulus() == 0b100011011);
}

TEST_CASE("user moduli are accepted only when irreducible of the right degree") {
    FieldSpec F = field(4, 0b11111); // x^4+x^3+x^2+x+1
    CHECK(F.modulus() == 0b11111);
    CHECK(F.pow(2, 5) == 1); // x has order 5 under this modulus
    CHECK_THROWS_AS(field(4, 0b10101), std::invalid_argument); // (x^2+x+1)^2
    CHECK_THROWS_AS(field(4, 0b111), std::invalid_argument);   // wrong degree
    CHECK_THROWS_AS(field(3, 0b1001), std::invalid_argument);  // x^3+1
    CHECK_THROWS_AS(field(0), std::invalid_argument);
    CHECK_THROWS_AS(field(33), std::invalid_argument);
}

TEST_CASE("irreducibility tester agrees with hand-factored small cases") {
    CHECK(is_irreducible_gf2(0b111));
    CHECK(is_irreducible_gf2(0b1011));
    CHECK(is_irreducible_gf2(0b1101));
    CHECK_FALSE(is_irreducible_gf2(0b1001));  // (x+1)(x^2+x+1)
    CHECK_FALSE(is_irreducible_gf2(0b1111));  // (x+1)^3
    CHECK_FALSE(is_irreducible_gf2(0b110));   // x(x+1)
    CHECK_FALSE(is_irreducible_gf2(0b10101)); // (x^2+x+1)^2
    CHECK_FALSE(is_irreducible_gf2(1));
    CHECK_FALSE(is_irreducible_gf2(0));
}

TEST_CASE("field axioms hold exhaustively for small m") {
    for (int m : {2, 3, 4, 5, 6}) {
        FieldSpec F = field(m);
        std::uint64_t size = 1ull << m;
        // every nonzero element has a working inverse
        for (FieldElement a = 1; a < size; ++a) CHECK(F.mul(a, F.inverse(a)) == 1);
        // associativity and distributivity on seeded random triples
        std::mt19937_64 rng(40 + m);
        for (int trial = 0; trial < 200; ++trial) {
            FieldElement a = rng() % size, b = rng() % size, c = rng() % size;
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, b ^ c) == (F.mul(a, b) ^ F.mul(a, c)));
        }
    }
}

TEST_CASE("power edge cases") {
    FieldSpec F = field(4);
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.pow(0, 5) == 0);
    CHECK(F.pow(7, 0) == 1);
    CHECK(F.pow(1, 1000) == 1);
    CHECK_THROWS_AS(F.inverse(0), std::domain_error);
    CHECK_THROWS_AS(F.element_order(0), std::domain_error);
}

TEST_CASE("primitive elements come out of an ascending search") {
    CHECK(primitive_element(field(1)) == 1);
    CHECK(primitive_element(field(2)) == 2);
    FieldSpec F = field(4);
    FieldElement g = primitive_element(F);
    CHECK(g == 2); // x generates under x^4+x+1
    CHECK(F.element_order(g) == 15);
    CHECK(F.pow(g, 15) == 1);
    CHECK(F.pow(g, 5) != 1);
    CHECK(F.pow(g, 3) != 1);
    // x^4+x^3+x^2+x+1 makes x an order-5 element, so the search moves on
    FieldSpec G = field(4, 0b11111);
    FieldElement h = primitive_element(G);
    CHECK(h != 2);
    CHECK(G.element_order(h) == 15);
}

TEST_CASE("element orders divide the group order") {
    FieldSpec F = field(5); // group order 31, prime
    FieldElement g = primitive_element(F);
    for (std::uint64_t j = 1; j <= 31; ++j) {
        std::uint64_t expect = 31 / std::gcd<std::uint64_t>(j, 31);
        CHECK(F.element_order(F.pow(g, j)) == expect);
    }
    FieldSpec H = field(6); // group order 63 = 9 * 7
    FieldElement h = primitive_element(H);
    CHECK(H.element_order(H.pow(h, 9)) == 7);
    CHECK(H.element_order(H.pow(h, 7)) == 9);
    CHECK(H.element_order(H.pow(h, 21)) == 3);
}

TEST_CASE("minimal polynomials over GF(16)") {
    FieldSpec F = field(4);
    FieldElement theta = primitive_element(F);
    CHECK(minimal_polynomial(F, 1) == 0b11);
    CHECK(minimal_polynomial(F, theta) == 0b10011);
    CHECK(minimal_polynomial(F, F.pow(theta, 3)) == 0b11111);
    CHECK_THROWS_AS(minimal_polynomial(F, 0), std::invalid_argument);
}

TEST_CASE("minimal polynomial degree equals the cyclotomic coset size") {
    for (int m : {3, 4, 5}) {
        FieldSpec F = field(m);
        FieldElement g = primitive_element(F);
        long n = static_cast<long>(F.group_order());
        for (long j = 0; j < n; ++j) {
            std::uint64_t mp = minimal_polynomial(F, F.pow(g, static_cast<std::uint64_t>(j)));
            CHECK(is_irreducible_gf2(mp));
            int deg = 0;
            for (std::uint64_t t = mp; t > 1; t >>= 1) ++deg;
            CHECK(deg == static_cast<int>(cyclotomic_coset(n, j).members.size()));
            // the element is a root of its own minimal polynomial
            FieldElement acc = 0;
            FieldElement beta = F.pow(g, static_cast<std::uint64_t>(j));
            for (int i = 0; i <= deg; ++i)
                if ((mp >> i) & 1) acc ^= F.pow(beta, static_cast<std::uint64_t>(i));
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("cyclotomic cosets modulo 15 and 31") {
    CyclotomicCoset c1 = cyclotomic_coset(15, 1);
    CHECK(c1.leader == 1);
    CHECK(c1.members == std::vector<long>{1, 2, 4, 8});
    CyclotomicCoset c5 = cyclotomic_coset(15, 5);
    CHECK(c5.leader == 5);
    CHECK(c5.members == std::vector<long>{5, 10});
    CyclotomicCoset c0 = cyclotomic_coset(15, 0);
    CHECK(c0.leader == 0);
    CHECK(c0.members == std::vector<long>{0});
    CyclotomicCoset d5 = cyclotomic_coset(31, 5);
    CHECK(d5.members == std::vector<long>{5, 9, 10, 18, 20});
    // negative representatives normalize into [0, n)
    CHECK(cyclotomic_coset(15, -1).members == cyclotomic_coset(15, 14).members);
    CHECK_THROWS_AS(cyclotomic_coset(6, 1), std::invalid_argument);
    // cosets partition the residues
    std::set<long> seen;
    for (long s = 0; s < 15; ++s)
        for (long v : cyclotomic_coset(15, s).members) seen.insert(v);
    CHECK(seen.size() == 15);
}

TEST_CASE("trace to GF(2) is additive, onto, and Frobenius-invariant") {
    FieldSpec F4 = field(2);
    CHECK(trace(F4, 1, 0) == 0);
    CHECK(trace_bit(F4, 2) == 1); // Tr(w) = w + w^2 = 1 in GF(4)
    for (int m : {3, 4, 5}) {
        FieldSpec F = field(m);
        std::uint64_t size = 1ull << m;
        int zeros = 0;
        for (FieldElement x = 0; x < size; ++x) {
            if (trace_bit(F, x) == 0) ++zeros;
            CHECK(trace_bit(F, F.mul(x, x)) == trace_bit(F, x));
        }
        CHECK(zeros == static_cast<int>(size / 2));
        std::mt19937_64 rng(70 + m);
        for (int trial = 0; trial < 100; ++trial) {
            FieldElement x = rng() % size, y = rng() % size;
            CHECK(trace_bit(F, x ^ y) == (trace_bit(F, x) ^ trace_bit(F, y)));
        }
    }
    CHECK_THROWS_AS(trace(field(6), 4, 1), std::invalid_argument);
}

TEST_CASE("trace tower identity over all of GF(256)") {
    // Tr_{q^2/2}(x) = Tr_{q/2}(x + x^q) with q = 16; the inner sum lands in
    // the GF(16) subfield and its four Frobenius terms finish the job
    FieldSpec F = field(8);
    for (FieldElement x = 0; x < 256; ++x) {
        FieldElement y = x ^ F.pow(x, 16);
        CHECK(F.pow(y, 16) == y); // subfield membership
        FieldElement rhs = y ^ F.pow(y, 2) ^ F.pow(y, 4) ^ F.pow(y, 8);
        CHECK(trace(F, 1, x) == rhs);
        // the same sum is what the subfield-degree trace call computes
        CHECK(trace(F, 4, x) == y);
    }
}

TEST_CASE("unit circle generator has order 2^{2m}+1 outside the subfield") {
    UnitCircle uc = unit_circle_generator(2);
    CHECK(uc.field.m() == 8);
    CHECK(uc.field.element_order(uc.theta) == 17);
    CHECK(uc.field.pow(uc.theta, 17) == 1);
    CHECK(uc.field.pow(uc.theta, 16) != uc.theta); // not in GF(16)
    // conjugacy class size = multiplicative order of 2 modulo 17
    std::uint64_t mp = minimal_polynomial(uc.field, uc.theta);
    int deg = 0;
    for (std::uint64_t t = mp; t > 1; t >>= 1) ++deg;
    CHECK(deg == 8);

    UnitCircle big = unit_circle_generator(3);
    CHECK(big.field.m() == 12);
    CHECK(big.field.element_order(big.theta) == 65);
    CHECK(big.field.pow(big.theta, 64) != big.theta);

    CHECK_THROWS_AS(unit_circle_generator(1), std::invalid_argument);
    CHECK_THROWS_AS(unit_circle_generator(9), std::invalid_argument);
}
