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

#ifndef OACR_KRAWTCHOUK_HPP
#define OACR_KRAWTCHOUK_HPP

#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace oacr {

// The discrete setting everything in this library lives in: the binary
// Hamming cube of length n projected to the interval [-1, 1].
//
//   grid        t_i = -1 + 2i/n, i = 0..n
//   measure     mu_n = 2^{-n} sum_i binom(n,i) delta_{t_i}
//   basis       Q_0 = 1, Q_1 = t, and the three-term recurrence
//               n*t*Q_i = (n-i)*Q_{i+1} + i*Q_{i-1}
//
// The Q_i are orthogonal for mu_n with <Q_i, Q_i> = 1/binom(n,i), and any
// polynomial of degree <= n expands as f = sum_j f_j Q_j with
// f_j = binom(n,j) * <f, Q_j>. In particular f_0 is the mean of f.
class KrawtchoukBasis {
public:
    KrawtchoukBasis(int n, int kmax) : n_(n), kmax_(kmax) {
        if (n < 1) throw std::invalid_argument("KrawtchoukBasis: n must be >= 1");
        if (kmax < 0 || kmax > n) throw std::invalid_argument("KrawtchoukBasis: need 0 <= kmax <= n");
        q_.reserve(kmax + 1);
        q_.push_back(RationalPoly::constant(Rational(1)));
        if (kmax >= 1) q_.push_back(RationalPoly::monomial(1));
        RationalPoly t = RationalPoly::monomial(1);
        for (int i = 1; i < kmax; ++i) {
            // Q_{i+1} = (n t Q_i - i Q_{i-1}) / (n - i)
            RationalPoly next = (t * q_[i] * Rational(n) - q_[i - 1] * Rational(i)) *
                                (Rational(1) / Rational(n - i));
            q_.push_back(next);
        }
        r_.reserve(n + 1);
        grid_.reserve(n + 1);
        for (int i = 0; i <= n; ++i) {
            r_.push_back(binomial(n, i));
            grid_.push_back(Rational(2 * i - n, n));
        }
        total_ = pow2_int(n);
    }

    int n() const { return n_; }
    int kmax() const { return kmax_; }
    const RationalPoly& Q(int i) const {
        if (i < 0 || i > kmax_) throw std::out_of_range("KrawtchoukBasis::Q index");
        return q_[i];
    }
    const Int& r(int i) const {
        if (i < 0 || i > n_) throw std::out_of_range("KrawtchoukBasis::r index");
        return r_[i];
    }
    const Rational& t(int i) const {
        if (i < 0 || i > n_) throw std::out_of_range("KrawtchoukBasis::t index");
        return grid_[i];
    }

    // integral of f against mu_n; a finite sum, exact
    Rational mean(const RationalPoly& f) const {
        Rational acc(0);
        for (int i = 0; i <= n_; ++i) acc += Rational(r_[i]) * f.eval(grid_[i]);
        return acc / Rational(total_);
    }

    Rational inner(const RationalPoly& f, const RationalPoly& g) const { return mean(f * g); }

    // coefficients f_j with f = sum_j f_j Q_j; rejects degree > n, where the
    // grid no longer determines the polynomial
    std::vector<Rational> expand(const RationalPoly& f) const {
        int d = f.degree();
        if (d > n_) throw std::invalid_argument("expand: degree exceeds n");
        if (d > kmax_) throw std::invalid_argument("expand: degree exceeds basis kmax");
        std::vector<Rational> out(std::max(d + 1, 1), Rational(0));
        if (f.is_zero()) return out;
        for (int j = 0; j <= d; ++j) out[j] = Rational(r_[j]) * inner(f, q_[j]);
        return out;
    }

    RationalPoly synthesize(const std::vector<Rational>& coeffs) const {
        RationalPoly acc;
        for (size_t j = 0; j < coeffs.size(); ++j) {
            if ((int)j > kmax_) throw std::invalid_argument("synthesize: coefficient past kmax");
            acc = acc + q_[j] * coeffs[j];
        }
        return acc;
    }

private:
    int n_, kmax_;
    std::vector<RationalPoly> q_;
    std::vector<Int> r_;
    std::vector<Rational> grid_;
    Int total_;
};

} // namespace oacr

#endif
