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

#ifndef OACR_ROOTS_HPP
#define OACR_ROOTS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace oacr {

inline int sign_at(const RationalPoly& f, const Rational& x) { return sign_of(f.eval(x)); }

// certified enclosure of a single real root.
//
// Invariant: either lo == hi and poly(lo) == 0 (the root is the exact
// rational lo), or poly is squarefree on [lo, hi] with poly(lo), poly(hi)
// nonzero of opposite sign and exactly one root in (lo, hi). Bisection
// preserves this, so comparisons against rationals are decidable exactly,
// with no tolerance anywhere.
struct RootEnclosure {
    RationalPoly poly;
    Rational lo, hi;
    int multiplicity = 1;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    RatInterval interval() const { return RatInterval(lo, hi); }

    void bisect_once() {
        if (exact()) return;
        Rational m = mid();
        int sm = sign_at(poly, m);
        if (sm == 0) {
            lo = hi = m;
            return;
        }
        if (sm * sign_at(poly, lo) < 0) hi = m;
        else lo = m;
    }

    void refine_to(const Rational& eps) {
        while (width() > eps) bisect_once();
    }

    // position of the enclosed root relative to c: -1 below, 0 equal, +1 above;
    // exact, needs no refinement
    int compare_to(const Rational& c) const {
        if (exact()) return lo < c ? -1 : (lo == c ? 0 : 1);
        if (c <= lo) return 1; // endpoints of non-exact enclosures are never roots
        if (c >= hi) return -1;
        int sc = sign_at(poly, c);
        if (sc == 0) return 0;
        return (sign_at(poly, lo) * sc < 0) ? -1 : 1;
    }
};

namespace detail {

// Sturm chain; each remainder is rescaled by a positive factor, which leaves
// sign variations untouched but curbs coefficient growth
inline std::vector<RationalPoly> sturm_chain(const RationalPoly& f) {
    std::vector<RationalPoly> chain;
    chain.push_back(f);
    RationalPoly d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (chain.back().degree() > 0) {
        auto [q, r] = RationalPoly::divmod(chain[chain.size() - 2], chain.back());
        (void)q;
        if (r.is_zero()) break; // common factor: f was not squarefree
        RationalPoly next = -r;
        Rational l = next.leading();
        if (l < 0) l = -l;
        chain.push_back(next * (Rational(1) / l));
    }
    return chain;
}

inline int sturm_variations(const std::vector<RationalPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// roots in (a, b]; needs f(a) != 0
inline int sturm_count(const std::vector<RationalPoly>& chain, const Rational& a,
                       const Rational& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

struct MidpointRoot {
    Rational at;
};

// isolates the roots of squarefree g in (a, b), where g(a) != 0 and g(b) != 0;
// throws MidpointRoot when a bisection midpoint lands exactly on a root
inline void isolate_squarefree(const RationalPoly& g, const Rational& a, const Rational& b,
                               std::vector<RootEnclosure>& out) {
    auto chain = sturm_chain(g);
    struct Span {
        Rational lo, hi;
    };
    std::vector<Span> work{{a, b}};
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        int cnt = sturm_count(chain, s.lo, s.hi);
        if (cnt == 0) continue;
        if (cnt == 1) {
            out.push_back(RootEnclosure{g, s.lo, s.hi, 1});
            continue;
        }
        Rational m = (s.lo + s.hi) / 2;
        if (sign_at(g, m) == 0) throw MidpointRoot{m};
        work.push_back({s.lo, m});
        work.push_back({m, s.hi});
    }
}

} // namespace detail

// all distinct real roots of f in the closed interval [a, b], sorted
// increasing, as pairwise disjoint enclosures carrying multiplicities
inline std::vector<RootEnclosure> isolate_roots(const RationalPoly& f, const Rational& a,
                                                const Rational& b) {
    if (f.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (a > b) throw std::invalid_argument("isolate_roots: empty interval");
    std::vector<RootEnclosure> out;
    if (f.degree() == 0) return out;
    for (auto& [factor, mult] : squarefree_decomposition(f)) {
        RationalPoly g = factor;
        std::vector<Rational> exact_hits;
        // rational roots met head-on (at endpoints or bisection midpoints) are
        // deflated away so the Sturm walk only ever sees nonvanishing endpoints
        if (sign_at(g, a) == 0) {
            exact_hits.push_back(a);
            g = g / RationalPoly::linear_root(a);
        }
        if (b != a && g.degree() > 0 && sign_at(g, b) == 0) {
            exact_hits.push_back(b);
            g = g / RationalPoly::linear_root(b);
        }
        std::vector<RootEnclosure> found;
        while (g.degree() > 0 && a != b) {
            // a linear remainder has the rational root -c0/c1; no need to bisect
            if (g.degree() == 1) {
                Rational r = -g.coeff(0) / g.coeff(1);
                if (a < r && r < b) exact_hits.push_back(r);
                break;
            }
            try {
                detail::isolate_squarefree(g, a, b, found);
                break;
            } catch (const detail::MidpointRoot& hit) {
                found.clear();
                exact_hits.push_back(hit.at);
                g = g / RationalPoly::linear_root(hit.at);
            }
        }
        for (auto& e : found) {
            e.multiplicity = mult;
            out.push_back(e);
        }
        for (auto& r : exact_hits) out.push_back(RootEnclosure{factor, r, r, mult});
    }
    // neighbours from one bisection share an endpoint and different factors may
    // interleave; refine until strictly disjoint, then order by position
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                if (!out[i].interval().disjoint_from(out[j].interval())) {
                    out[i].bisect_once();
                    out[j].bisect_once();
                    changed = true;
                }
    }
    std::sort(out.begin(), out.end(),
              [](const RootEnclosure& x, const RootEnclosure& y) { return x.hi < y.lo; });
    return out;
}

// strict order of two enclosed roots, refining them as needed; returns 0 when
// the roots coincide (decided exactly through a gcd witness)
inline int compare_roots(RootEnclosure& x, RootEnclosure& y) {
    if (x.exact() && y.exact()) return x.lo < y.lo ? -1 : (x.lo == y.lo ? 0 : 1);
    if (x.exact()) return -y.compare_to(x.lo);
    if (y.exact()) return x.compare_to(y.lo);
    for (int iter = 0;; ++iter) {
        if (x.hi < y.lo) return -1;
        if (y.hi < x.lo) return 1;
        if (iter == 64) {
            RationalPoly g = poly_gcd(x.poly, y.poly);
            if (g.degree() > 0) {
                Rational lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
                if (!isolate_roots(g, lo, hi).empty()) return 0;
            }
        }
        x.bisect_once();
        y.bisect_once();
    }
}

} // namespace oacr

#endif
