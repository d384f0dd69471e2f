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

#ifndef OACR_RATIONAL_HPP
#define OACR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oacr {

// Every quantity in this library that carries mathematical meaning is exact:
// arbitrary-precision integers and rationals in canonical form (gcd-reduced,
// positive denominator). Floating point never enters any computation; it only
// appears in output formatting, derived from exact values on demand.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& z) { return z.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

// floor(q) as an integer; exact for negative arguments too
inline Int floor_rat(const Rational& q) {
    Int p = numerator(q), d = denominator(q); // d > 0 in canonical form
    Int t = p / d;                            // truncates toward zero
    if (p < 0 && t * d != p) --t;
    return t;
}

inline Int ceil_rat(const Rational& q) { return -floor_rat(-q); }

inline Int pow2_int(unsigned e) { return Int(1) << e; }

// floor(sqrt(z)); boost's integer sqrt already truncates
inline Int isqrt(const Int& z) {
    if (z < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(z);
}

inline bool is_square(const Int& z) {
    if (z < 0) return false;
    Int r = isqrt(z);
    return r * r == z;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step
    }
    return r;
}

// accepts "p/q", "p", or a finite decimal such as "-0.25"
inline Rational parse_rational(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("cannot parse rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int p(s.substr(0, slash));
            Int q(s.substr(slash + 1));
            if (q == 0) bad();
            return Rational(p, q);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(Int(s));
        bool neg = s[0] == '-';
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        if (fp.empty()) fp = "0";
        Int scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Int whole(ip), frac(fp);
        if (frac < 0) bad();
        Int num = whole * scale + (neg ? -frac : frac);
        return Rational(num, scale);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0); // unreachable
}

inline std::string rat_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// decimal expansion with `digits` fractional digits;
// mode < 0 rounds toward -inf, mode > 0 toward +inf, mode 0 truncates
inline std::string decimal_string(const Rational& q, int digits, int mode = 0) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = q * Rational(scale);
    Int v;
    if (mode < 0) v = floor_rat(scaled);
    else if (mode > 0) v = ceil_rat(scaled);
    else v = numerator(scaled) / denominator(scaled);
    bool neg = v < 0;
    Int a = neg ? Int(-v) : v;
    Int frac_part = a % scale, int_part = a / scale;
    std::string frac = frac_part.str();
    while ((int)frac.size() < digits) frac = "0" + frac;
    std::string out = (neg ? "-" : "") + int_part.str();
    if (digits > 0) out += "." + frac;
    return out;
}

} // namespace oacr

#endif
