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

#ifndef OACR_QUADFIELD_HPP
#define OACR_QUADFIELD_HPP

#include <oacr/roots.hpp>

#include <stdexcept>

namespace oacr {

// Element a + b sqrt(D) of a real quadratic extension. D is a nonnegative
// integer; a square D is folded into the rational part on construction, so
// D > 1 implies D is not a perfect square and the representation is unique.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), D_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), D_(0) {}
    QuadExt(Rational a, Rational b, Int D) : a_(std::move(a)), b_(std::move(b)), D_(std::move(D)) {
        if (D_ < 0) throw std::domain_error("QuadExt: negative radicand");
        if (b_ != 0 && is_square(D_)) {
            a_ += b_ * Rational(isqrt(D_));
            b_ = 0;
        }
        if (b_ == 0) {
            D_ = 0;
            return;
        }
        // pull small square factors out of the radicand; huge radicands stay
        // as they are, so equal values can differ in representation there
        for (Int i = 2; i <= 4096 && i * i <= D_; ++i) {
            while (D_ % (i * i) == 0) {
                D_ /= i * i;
                b_ *= Rational(i);
            }
        }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Int& D() const { return D_; }
    bool is_rational() const { return b_ == 0; }

    // exact value when rational, throws otherwise
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("QuadExt: irrational value");
        return a_;
    }

    QuadExt conjugate() const { return QuadExt(a_, -b_, D_); }

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.D_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check_compatible(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.b_ != 0 ? x.D_ : y.D_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check_compatible(x, y);
        Int D = x.b_ != 0 ? x.D_ : y.D_;
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(D), x.a_ * y.b_ + x.b_ * y.a_, D);
    }

    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        // multiply by the conjugate; the norm a^2 - b^2 D vanishes only at 0
        Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.D_);
        if (norm == 0) throw std::domain_error("QuadExt: division by zero");
        QuadExt num = x * y.conjugate();
        return QuadExt(num.a_ / norm, num.b_ / norm, num.D_);
    }

    // sign of a + b sqrt(D), decided by squaring: for a, b of mixed signs the
    // winner is whichever of a^2 and b^2 D is larger
    int sign() const {
        if (b_ == 0) return sign_of(a_);
        int sa = sign_of(a_), sb = sign_of(b_);
        if (sa == 0) return sb;
        if (sa == sb || sb == 0) return sa;
        int cmp = sign_of(a_ * a_ - b_ * b_ * Rational(D_));
        return cmp == 0 ? 0 : cmp * sa;
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).sign() == 0; }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    int compare_to(const Rational& c) const { return (*this - QuadExt(c)).sign(); }

    // root enclosure carrying the minimal polynomial; rational values get a
    // point enclosure of t - a, irrational ones x^2 - 2a x + (a^2 - b^2 D)
    RootEnclosure enclosure() const {
        if (is_rational())
            return RootEnclosure{RationalPoly::linear_root(a_), a_, a_, 1};
        RationalPoly minimal({a_ * a_ - b_ * b_ * Rational(D_), -2 * a_, Rational(1)});
        Int s = isqrt(D_);
        Rational lo_r = Rational(s), hi_r = Rational(s + 1); // sqrt(D) in (s, s+1)
        for (int iter = 0; iter < 512; ++iter) {
            Rational lo = b_ > 0 ? a_ + b_ * lo_r : a_ + b_ * hi_r;
            Rational hi = b_ > 0 ? a_ + b_ * hi_r : a_ + b_ * lo_r;
            if (sign_at(minimal, lo) * sign_at(minimal, hi) < 0)
                return RootEnclosure{minimal, lo, hi, 1};
            // endpoints hit the conjugate side or a sign-degenerate point:
            // tighten the sqrt(D) bracket and retry
            Rational m = (lo_r + hi_r) / 2;
            if (m * m > Rational(D_)) hi_r = m;
            else lo_r = m;
        }
        throw std::logic_error("QuadExt: enclosure bracket failed to settle");
    }

    std::string str() const {
        if (is_rational()) return rat_string(a_);
        std::string out = "(" + rat_string(a_);
        out += sign_of(b_) < 0 ? " - " : " + ";
        Rational ab = b_ < 0 ? -b_ : b_;
        if (ab != 1) out += rat_string(ab) + "*";
        out += "sqrt(" + D_.str() + "))";
        return out;
    }

  private:
    static void check_compatible(const QuadExt& x, const QuadExt& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.D_ != y.D_)
            throw std::domain_error("QuadExt: mixed radicands");
    }

    Rational a_, b_;
    Int D_;
};

// exact roots (-q1 +- sqrt(q1^2 - 4 q0 q2)) / (2 q2) of q2 x^2 + q1 x + q0
// when the discriminant is nonnegative; ascending order
inline std::vector<QuadExt> solve_quadratic(const Rational& q2, const Rational& q1,
                                            const Rational& q0) {
    if (q2 == 0) {
        if (q1 == 0) throw std::invalid_argument("solve_quadratic: degenerate equation");
        return {QuadExt(-q0 / q1)};
    }
    Rational disc = q1 * q1 - 4 * q0 * q2;
    if (disc < 0) return {};
    // scale the discriminant to an integer radicand: disc = (u/v)^2 * w
    Int nu = numerator(disc), de = denominator(disc);
    Int w = nu * de; // disc = w / de^2
    Rational scale = Rational(Int(1), de);
    QuadExt root_disc(Rational(0), scale, w); // sqrt(disc) >= 0
    QuadExt r1 = (QuadExt(-q1) - root_disc) / QuadExt(2 * q2);
    QuadExt r2 = (QuadExt(-q1) + root_disc) / QuadExt(2 * q2);
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

} // namespace oacr

#endif
