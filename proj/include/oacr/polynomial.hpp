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

#ifndef OACR_POLYNOMIAL_HPP
#define OACR_POLYNOMIAL_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "interval.hpp"
#include "rational.hpp"

namespace oacr {

// dense univariate polynomial over the rationals;
// invariant: coefficient vector empty (the zero polynomial) or nonzero leading coefficient
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static RationalPoly zero() { return RationalPoly(); }
    static RationalPoly constant(const Rational& v) { return RationalPoly({v}); }
    static RationalPoly monomial(int deg, const Rational& coeff = Rational(1)) {
        if (coeff == 0) return zero();
        std::vector<Rational> c(deg + 1, Rational(0));
        c[deg] = coeff;
        return RationalPoly(std::move(c));
    }
    // t - r
    static RationalPoly linear_root(const Rational& r) { return RationalPoly({-r, Rational(1)}); }

    int degree() const { return (int)c_.size() - 1; } // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const Rational& coeff(int i) const {
        static const Rational z(0);
        return (i >= 0 && i < (int)c_.size()) ? c_[i] : z;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    RatInterval eval(const RatInterval& x) const {
        RatInterval r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + RatInterval(*it);
        return r;
    }

    RationalPoly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational((long)i);
        return RationalPoly(std::move(d));
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator-(const RationalPoly& a) {
        std::vector<Rational> c(a.c_);
        for (auto& v : c) v = -v;
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator*(const RationalPoly& a, const Rational& s) {
        if (s == 0) return zero();
        std::vector<Rational> c(a.c_);
        for (auto& v : c) v *= s;
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator*(const Rational& s, const RationalPoly& a) { return a * s; }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    // exact quotient and remainder, deg r < deg b
    static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> r(a.c_);
        int db = b.degree();
        if ((int)r.size() - 1 < db) return {zero(), a};
        std::vector<Rational> q(r.size() - db, Rational(0));
        const Rational& lb = b.c_.back();
        for (int i = (int)r.size() - 1; i >= db; --i) {
            if (r[i] == 0) continue;
            Rational f = r[i] / lb;
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
        }
        return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
    }

    // exact division; throws if the remainder is nonzero
    friend RationalPoly operator/(const RationalPoly& a, const RationalPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("polynomial division not exact");
        return q;
    }

    RationalPoly monic() const {
        if (is_zero()) return zero();
        return *this * (Rational(1) / leading());
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += (c_[i] > 0) ? " + " : " - ";
            else if (c_[i] < 0) s += "-";
            Rational a = c_[i] > 0 ? c_[i] : Rational(-c_[i]);
            bool unit = (a == 1 && i > 0);
            if (!unit) s += rat_string(a);
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    std::vector<Rational> c_;
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// monic gcd, Euclid with re-normalization each step to tame coefficient growth
inline RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        auto [q, r] = RationalPoly::divmod(a, b);
        (void)q;
        a = b;
        b = r.is_zero() ? RationalPoly::zero() : r.monic();
    }
    return a; // already monic
}

inline RationalPoly squarefree_part(const RationalPoly& f) {
    if (f.degree() <= 0) return f.is_zero() ? f : RationalPoly::constant(Rational(1));
    RationalPoly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) return f.monic();
    return (f / g).monic();
}

// Yun's algorithm: returns pairs (g, m) with f ~ prod g^m, the g squarefree,
// monic and pairwise coprime, m strictly increasing
inline std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& f) {
    std::vector<std::pair<RationalPoly, int>> out;
    if (f.degree() <= 0) return out;
    RationalPoly fm = f.monic();
    RationalPoly fp = fm.derivative();
    RationalPoly g = poly_gcd(fm, fp);
    if (g.degree() == 0) {
        out.push_back({fm, 1});
        return out;
    }
    RationalPoly w = fm / g;
    RationalPoly y = fp / g;
    RationalPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        RationalPoly gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.push_back({gi, i});
        w = w / gi;
        y = z / gi;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

} // namespace oacr

#endif
