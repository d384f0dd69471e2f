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

#ifndef OACR_ADJACENT_HPP
#define OACR_ADJACENT_HPP

#include <stdexcept>
#include <vector>

#include "krawtchouk.hpp"
#include "roots.hpp"

namespace oacr {

// Adjacent orthogonal systems: anchor a point ell < 0, pass to the modified
// (sign-changing) weight (t - ell) d mu_n, and normalize the resulting
// orthogonal polynomials to take the value 1 at t = 1. They are computed
// through the reproducing kernel
//
//     T_i(t, v) = sum_{j <= i} binom(n,j) Q_j(t) Q_j(v)
//
// as P_i(t) = T_i(t, ell) / T_i(1, ell). Their roots drive both the
// quadrature rules and the certified upper bounds downstream.

// T_i(t, v) as a polynomial in t, for fixed rational v
inline RationalPoly kernel_at(const KrawtchoukBasis& b, int i, const Rational& v) {
    if (i < 0 || i > b.kmax()) throw std::out_of_range("kernel_at: index");
    RationalPoly acc;
    for (int j = 0; j <= i; ++j) acc = acc + b.Q(j) * (Rational(b.r(j)) * b.Q(j).eval(v));
    return acc;
}

// The three independent checks on an anchor ell, reported separately because
// they gate different conclusions:
//   below_top_root   -> the modified weight is positive definite up to
//                       degree k-1, so the k-root quadrature exists with
//                       positive weights
//   ratio_below_one  -> the largest adjacent root stays below 1, so root
//                       based upper bounds are nonvacuous
//   above_next_root  -> ell lies in the refined window (t_{k+1,1}, t_{k,1});
//                       only then do the sharpened bracket and dominance
//                       statements apply
// "valid" deliberately means the first two plus -1 < ell; the exact boundary
// anchor ell = -1 is its own supported mode.
struct EllValidity {
    Rational ell;
    int k = 0;
    bool above_next_root = false; // t_{k+1,1} < ell
    bool below_top_root = false;  // ell < t_{k,1}
    bool ratio_below_one = false; // Q_{k+1}(ell) / Q_k(ell) < 1
    bool boundary = false;        // ell == -1 exactly

    bool valid() const {
        return !boundary && ell > Rational(-1) && below_top_root && ratio_below_one;
    }
    bool usable() const { return valid() || boundary; }
};

inline EllValidity validate_ell(const KrawtchoukBasis& b, int k, const Rational& ell) {
    if (k < 1 || k + 1 > b.kmax())
        throw std::invalid_argument("validate_ell: need 1 <= k and k+1 <= basis kmax");
    EllValidity v;
    v.ell = ell;
    v.k = k;
    v.boundary = (ell == Rational(-1));
    auto rk = isolate_roots(b.Q(k), Rational(-1), Rational(1));
    auto rk1 = isolate_roots(b.Q(k + 1), Rational(-1), Rational(1));
    v.below_top_root = !rk.empty() && rk.front().compare_to(ell) > 0;
    v.above_next_root = !rk1.empty() && rk1.front().compare_to(ell) < 0;
    Rational qk = b.Q(k).eval(ell);
    if (qk != 0) {
        // ratio < 1  <=>  (Q_{k+1} - Q_k)(ell) and Q_k(ell) have opposite signs
        Rational diff = b.Q(k + 1).eval(ell) - qk;
        v.ratio_below_one = sign_of(diff) * sign_of(qk) < 0;
    }
    return v;
}

struct AdjacentFamily {
    int n = 0, k = 0;
    Rational ell;
    std::vector<RationalPoly> polys; // P_0 .. P_k, each with P_i(1) = 1
};

inline AdjacentFamily adjacent_family(const KrawtchoukBasis& b, int k, const Rational& ell) {
    EllValidity v = validate_ell(b, k, ell);
    if (!v.usable())
        throw std::domain_error("adjacent_family: anchor fails validation (need -1 < ell < t_{k,1} "
                                "with ratio below one, or exactly ell = -1)");
    AdjacentFamily fam;
    fam.n = b.n();
    fam.k = k;
    fam.ell = ell;
    for (int i = 0; i <= k; ++i) {
        RationalPoly num = kernel_at(b, i, ell);
        Rational den = num.eval(Rational(1));
        if (den == 0) throw std::domain_error("adjacent_family: T_i(1, ell) = 0");
        fam.polys.push_back(num * (Rational(1) / den));
    }
    return fam;
}

// all k roots of the top polynomial; they are real, simple, and inside
// (t_{k,1}, 1) for every usable anchor
inline std::vector<RootEnclosure> adjacent_roots(const AdjacentFamily& fam) {
    auto roots = isolate_roots(fam.polys[fam.k], Rational(-1), Rational(1));
    if ((int)roots.size() != fam.k)
        throw std::logic_error("adjacent_roots: top polynomial must have k simple roots in [-1, 1]");
    for (const auto& r : roots)
        if (r.multiplicity != 1) throw std::logic_error("adjacent_roots: multiple root");
    return roots;
}

inline RootEnclosure largest_adjacent_root(const AdjacentFamily& fam) {
    return adjacent_roots(fam).back();
}

enum class EllRegime { Boundary, Window, Outside };

struct InterlacingReport {
    EllRegime regime = EllRegime::Outside;
    bool row_counts_ok = false;      // row i has exactly i simple roots
    bool row_brackets_ok = false;    // every root sits in its stated bracket
    bool consecutive_ok = false;     // consecutive rows strictly interlace
    bool dominance_applicable = false;
    bool dominance_ok = false;       // top root exceeds t_{k+1,k+1} (Window only)

    bool ok() const {
        return row_counts_ok && row_brackets_ok && consecutive_ok &&
               (!dominance_applicable || dominance_ok);
    }
};

// Bracket pattern, exact in every comparison:
//   rows i < k (anchor always below t_{i+1,1}):  root_j in (t_{i,j}, t_{i+1,j+1})
//   top row, Outside/Boundary regime:            root_j in (t_{k,j}, t_{k+1,j+1}]
//   top row, Window regime: root_j in (t_{k+1,j+1}, t_{k,j+1}) for j < k and
//                           root_k in (t_{k+1,k+1}, 1), with strict dominance
//                           root_k > t_{k+1,k+1}
// The regime is the sign of Q_{k+1}(ell) Q_k(ell): positive inside the window,
// negative outside; the boundary anchor behaves like Outside.
inline InterlacingReport check_interlacing(const KrawtchoukBasis& b, const AdjacentFamily& fam) {
    const int k = fam.k;
    InterlacingReport rep;
    if (fam.ell == Rational(-1)) rep.regime = EllRegime::Boundary;
    else {
        int s = sign_of(b.Q(k + 1).eval(fam.ell)) * sign_of(b.Q(k).eval(fam.ell));
        rep.regime = s > 0 ? EllRegime::Window : EllRegime::Outside;
    }

    std::vector<std::vector<RootEnclosure>> kraw(k + 2), adj(k + 1);
    for (int i = 1; i <= k + 1; ++i) kraw[i] = isolate_roots(b.Q(i), Rational(-1), Rational(1));
    rep.row_counts_ok = true;
    for (int i = 1; i <= k; ++i) {
        adj[i] = isolate_roots(fam.polys[i], Rational(-1), Rational(1));
        if ((int)adj[i].size() != i) rep.row_counts_ok = false;
        for (const auto& r : adj[i])
            if (r.multiplicity != 1) rep.row_counts_ok = false;
    }
    if (!rep.row_counts_ok) return rep;

    rep.row_brackets_ok = true;
    for (int i = 1; i <= k; ++i) {
        bool top = (i == k);
        bool window_top = top && rep.regime == EllRegime::Window;
        for (int j = 0; j < i; ++j) {
            if (window_top) {
                // (t_{k+1,j+1}, t_{k,j+1}) for inner roots, (t_{k+1,k+1}, 1) for the last
                if (compare_roots(kraw[k + 1][j + 1], adj[i][j]) >= 0) rep.row_brackets_ok = false;
                if (j + 1 < i) {
                    if (compare_roots(adj[i][j], kraw[k][j + 1]) >= 0) rep.row_brackets_ok = false;
                } else {
                    if (adj[i][j].compare_to(Rational(1)) >= 0) rep.row_brackets_ok = false;
                }
            } else {
                if (compare_roots(kraw[i][j], adj[i][j]) >= 0) rep.row_brackets_ok = false;
                int upper = compare_roots(adj[i][j], kraw[i + 1][j + 1]);
                if (top ? upper > 0 : upper >= 0) rep.row_brackets_ok = false;
            }
        }
    }

    rep.consecutive_ok = true;
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < i; ++j) {
            if (compare_roots(adj[i + 1][j], adj[i][j]) >= 0) rep.consecutive_ok = false;
            if (compare_roots(adj[i][j], adj[i + 1][j + 1]) >= 0) rep.consecutive_ok = false;
        }

    if (rep.regime == EllRegime::Window) {
        rep.dominance_applicable = true;
        rep.dominance_ok = compare_roots(kraw[k + 1][k], adj[k][k - 1]) < 0;
    }
    return rep;
}

// deterministic rational anchor strictly inside the window (t_{k+1,1}, t_{k,1})
inline Rational window_midpoint_anchor(const KrawtchoukBasis& b, int k) {
    if (k < 1 || k + 1 > b.kmax())
        throw std::invalid_argument("window_midpoint_anchor: need 1 <= k and k+1 <= basis kmax");
    auto lo = isolate_roots(b.Q(k + 1), Rational(-1), Rational(1)).front();
    auto hi = isolate_roots(b.Q(k), Rational(-1), Rational(1)).front();
    Rational eps(Int(1), pow2_int(20));
    while (true) {
        lo.refine_to(eps);
        hi.refine_to(eps);
        if (lo.hi < hi.lo) return (lo.hi + hi.lo) / 2;
        eps = eps / 1024;
    }
}

// deterministic rational anchor at distance >= mu below t_{k,1} (and below
// t_{k,1} - mu by at most mu/1024); mu > 0
inline Rational anchor_below_top(const KrawtchoukBasis& b, int k, const Rational& mu) {
    if (mu <= 0) throw std::invalid_argument("anchor_below_top: mu must be positive");
    if (k < 1 || k > b.kmax())
        throw std::invalid_argument("anchor_below_top: need 1 <= k <= basis kmax");
    auto top = isolate_roots(b.Q(k), Rational(-1), Rational(1)).front();
    top.refine_to(mu / 1024);
    return top.lo - mu;
}

// quadrature on [-1, 1] against mu_n; nodes are root enclosures (exact points
// allowed), weights are certified interval enclosures of the exact weights,
// shrinkable on demand by refining the nodes
struct QuadratureRule {
    int n = 0, k = 0;
    bool adjacent = false;
    Rational ell;                     // meaningful when adjacent
    std::vector<RootEnclosure> nodes; // ascending
    std::vector<RatInterval> weights;
    int exact_degree = 0;
};

namespace detail {

// ascending nodes enclose distinct reals but the initial brackets may
// overlap; bisect until consecutive intervals are disjoint
inline void separate_nodes(std::vector<RootEnclosure>& nodes) {
    for (int guard = 0; guard < 512; ++guard) {
        bool ok = true;
        for (size_t i = 0; i + 1 < nodes.size(); ++i) {
            if (!nodes[i].interval().disjoint_from(nodes[i + 1].interval())) {
                ok = false;
                nodes[i].bisect_once();
                nodes[i + 1].bisect_once();
            }
        }
        if (ok) return;
    }
    throw std::logic_error("separate_nodes: nodes failed to separate");
}

// w_i = mean of the normalized Lagrange polynomial of node i: numerator
// coefficients carry the node intervals, the grid sum is exact
inline std::vector<RatInterval> lagrange_mean_weights(const KrawtchoukBasis& b,
                                                      std::vector<RootEnclosure>& nodes) {
    separate_nodes(nodes);
    const int m = (int)nodes.size();
    std::vector<RatInterval> w(m);
    Rational total = 0;
    for (int i = 0; i < m; ++i) {
        std::vector<RatInterval> num{RatInterval(Rational(1))}; // prod_{j != i} (t - x_j)
        RatInterval den(Rational(1));
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            RatInterval xj = nodes[j].interval();
            std::vector<RatInterval> next(num.size() + 1);
            for (size_t d = 0; d < num.size(); ++d) {
                next[d + 1] = next[d + 1] + num[d];
                next[d] = next[d] + num[d] * (-xj);
            }
            num = std::move(next);
            den = den * (nodes[i].interval() - xj);
        }
        RatInterval mean;
        Int scale = pow2_int(b.n());
        for (int g = 0; g <= b.n(); ++g) {
            RatInterval val;
            for (auto it = num.rbegin(); it != num.rend(); ++it)
                val = val * RatInterval(b.t(g)) + *it;
            mean = mean + val * Rational(b.r(g));
        }
        mean = mean * Rational(Rational(1) / Rational(scale));
        w[i] = mean / den;
    }
    return w;
}

} // namespace detail

// nodes at the k roots of Q_k; integrates exactly up to degree 2k - 1
inline QuadratureRule gauss_like_rule(const KrawtchoukBasis& b, int k) {
    if (k < 1 || k > b.kmax()) throw std::invalid_argument("gauss_like_rule: need 1 <= k <= kmax");
    QuadratureRule rule;
    rule.n = b.n();
    rule.k = k;
    rule.adjacent = false;
    rule.nodes = isolate_roots(b.Q(k), Rational(-1), Rational(1));
    if ((int)rule.nodes.size() != k) throw std::logic_error("gauss_like_rule: expected k nodes");
    rule.weights = detail::lagrange_mean_weights(b, rule.nodes);
    rule.exact_degree = 2 * k - 1;
    return rule;
}

// nodes at the anchor ell plus the k roots of the top adjacent polynomial;
// integrates exactly up to degree 2k, all weights positive for usable anchors
inline QuadratureRule adjacent_rule(const KrawtchoukBasis& b, int k, const Rational& ell) {
    AdjacentFamily fam = adjacent_family(b, k, ell);
    QuadratureRule rule;
    rule.n = b.n();
    rule.k = k;
    rule.adjacent = true;
    rule.ell = ell;
    RootEnclosure anchor{RationalPoly::linear_root(ell), ell, ell, 1};
    auto roots = adjacent_roots(fam);
    for (auto& r : roots)
        if (r.compare_to(ell) <= 0)
            throw std::logic_error("adjacent_rule: root at or below the anchor");
    rule.nodes.push_back(anchor);
    for (auto& r : roots) rule.nodes.push_back(r);
    rule.weights = detail::lagrange_mean_weights(b, rule.nodes);
    rule.exact_degree = 2 * k;
    return rule;
}

// shrink the weight enclosures below eps by refining the node enclosures
inline void refine_rule(QuadratureRule& rule, const KrawtchoukBasis& b, const Rational& eps) {
    Rational node_eps = eps;
    for (int guard = 0; guard < 64; ++guard) {
        bool done = true;
        for (const auto& w : rule.weights)
            if (w.width() > eps) done = false;
        if (done) return;
        for (auto& nd : rule.nodes) nd.refine_to(node_eps);
        rule.weights = detail::lagrange_mean_weights(b, rule.nodes);
        node_eps = node_eps / 256;
    }
    throw std::logic_error("refine_rule: no convergence");
}

inline RatInterval apply_rule(const QuadratureRule& rule, const RationalPoly& f) {
    RatInterval acc;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc = acc + rule.weights[i] * f.eval(rule.nodes[i].interval());
    return acc;
}

} // namespace oacr

#endif
