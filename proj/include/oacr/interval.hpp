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

#ifndef OACR_INTERVAL_HPP
#define OACR_INTERVAL_HPP

#include <algorithm>
#include <stdexcept>

#include "rational.hpp"

namespace oacr {

// closed interval with exact rational endpoints, lo <= hi;
// interval arithmetic here is outward-exact: no rounding ever happens,
// so the result interval contains the exact image set
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(const Rational& v) : lo(v), hi(v) {}
    RatInterval(const Rational& a, const Rational& b) : lo(a), hi(b) {
        if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
    }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool certainly_positive() const { return lo > 0; }
    bool certainly_negative() const { return hi < 0; }
    bool disjoint_from(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }
};

inline RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

// requires 0 outside b
inline RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::domain_error("RatInterval: division by interval containing 0");
    RatInterval inv(Rational(1) / b.hi, Rational(1) / b.lo);
    return a * inv;
}

inline RatInterval operator+(const RatInterval& a, const Rational& b) { return a + RatInterval(b); }
inline RatInterval operator-(const RatInterval& a, const Rational& b) { return a - RatInterval(b); }
inline RatInterval operator*(const RatInterval& a, const Rational& b) { return a * RatInterval(b); }
inline RatInterval operator*(const Rational& a, const RatInterval& b) { return RatInterval(a) * b; }

inline RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

} // namespace oacr

#endif
