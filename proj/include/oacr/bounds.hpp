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

// Certified lower bounds on the normalized covering radius rho of a binary
// orthogonal array, together with their integer translations R <= floor of
// n(1 - rho)/2. Every reported number is exact: a rational, or an isolated
// root of an explicit polynomial. Floors are decided by sign tests, never by
// floating point.

#ifndef OACR_BOUNDS_HPP
#define OACR_BOUNDS_HPP

#include <oacr/adjacent.hpp>
#include <oacr/quadfield.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oacr {

// exact value: a rational, or an isolated root of a rational polynomial
class AlgebraicValue {
  public:
    AlgebraicValue() : rat_(Rational(0)) {}
    AlgebraicValue(Rational v) : rat_(std::move(v)) {}
    AlgebraicValue(RootEnclosure e) {
        if (e.exact()) rat_ = e.lo;
        else enc_ = std::move(e);
    }
    static AlgebraicValue from_quadext(const QuadExt& q) {
        if (q.is_rational()) return AlgebraicValue(q.rational_value());
        return AlgebraicValue(q.enclosure());
    }

    bool is_rational() const { return rat_.has_value(); }
    const Rational& rational_value() const {
        if (!rat_) throw std::domain_error("AlgebraicValue: not rational");
        return *rat_;
    }
    const RootEnclosure& root() const {
        if (!enc_) throw std::domain_error("AlgebraicValue: not a root");
        return *enc_;
    }

    RatInterval interval() const { return rat_ ? RatInterval(*rat_) : enc_->interval(); }
    void refine_to(const Rational& eps) {
        if (enc_) enc_->refine_to(eps);
    }

    // position relative to c: -1 below, 0 equal, +1 above; exact
    int compare_to(const Rational& c) const {
        if (rat_) return *rat_ < c ? -1 : (*rat_ == c ? 0 : 1);
        return enc_->compare_to(c);
    }
    // exact three-way comparison; refines enclosures as needed
    int compare(AlgebraicValue& other) {
        if (rat_ && other.rat_) return *rat_ < *other.rat_ ? -1 : (*rat_ == *other.rat_ ? 0 : 1);
        if (rat_) return -other.enc_->compare_to(*rat_);
        if (other.rat_) return enc_->compare_to(*other.rat_);
        return compare_roots(*enc_, *other.enc_);
    }

    // decimal rendering; irrational values are first refined below 10^-(digits+2)
    std::string decimal(int digits = 12) {
        if (rat_) return decimal_string(*rat_, digits, 0);
        Rational eps(Int(1), boost::multiprecision::pow(Int(10), digits + 2));
        enc_->refine_to(eps);
        return decimal_string(enc_->mid(), digits, 0);
    }

    std::string str() const {
        if (rat_) return rat_string(*rat_);
        return "root of " + enc_->poly.str("t") + " in [" + rat_string(enc_->lo) + ", " +
               rat_string(enc_->hi) + "]";
    }

  private:
    std::optional<Rational> rat_;
    std::optional<RootEnclosure> enc_;
};

// largest integer j with v <= 1 - 2j/n, i.e. the exact floor of n(1 - v)/2;
// for enclosed roots the decision is a sign test against grid rationals
inline Int distance_floor(int n, const AlgebraicValue& v) {
    if (v.is_rational()) return floor_rat(Rational(n) * (1 - v.rational_value()) / 2);
    for (long j = n; j >= 0; --j)
        if (v.compare_to(Rational(n - 2 * j, n)) <= 0) return Int(j);
    return Int(0);
}

// detect a root landing exactly on a grid point t_i = -1 + 2i/n
inline std::optional<Rational> snap_to_grid(int n, RootEnclosure& e) {
    if (e.exact()) return e.lo;
    e.refine_to(Rational(1, 2 * n)); // at most one grid point can remain inside
    Rational z = (e.mid() + 1) * Rational(n, 2);
    Int i = floor_rat(z);
    Int next = i + 1;
    for (const Int& c : {i, next}) {
        if (c < 0 || c > n) continue;
        Rational g = Rational(2 * c - Int(n), Int(n));
        if (e.compare_to(g) == 0) return g;
    }
    return std::nullopt;
}

namespace detail {

inline AlgebraicValue snapped_value(int n, RootEnclosure e) {
    if (auto g = snap_to_grid(n, e)) return AlgebraicValue(*g);
    return AlgebraicValue(std::move(e));
}

} // namespace detail

enum class BoundKind { FL, Case1, Case2, Case2WithDistance, Universal, Rao };

inline std::string bound_kind_name(BoundKind k) {
    switch (k) {
    case BoundKind::FL: return "fl";
    case BoundKind::Case1: return "case1";
    case BoundKind::Case2: return "case2";
    case BoundKind::Case2WithDistance: return "case2-with-distance";
    case BoundKind::Universal: return "universal";
    case BoundKind::Rao: return "rao";
    }
    return "?";
}

// hypothesis a bound is conditional on; Case 1 assumes some deep hole y has
// t_1(y) >= ell, Case 2 assumes every deep hole is a codeword complement
struct Assumption {
    enum class Kind { Unconditional, Case1Holds, Case2Holds, MinDistanceAtLeast };
    Kind kind = Kind::Unconditional;
    std::optional<Rational> ell; // for Case1Holds
    long d = 0;                  // for MinDistanceAtLeast

    static Assumption unconditional() { return {}; }
    static Assumption case1(Rational l) {
        return Assumption{Kind::Case1Holds, std::move(l), 0};
    }
    static Assumption case2() { return Assumption{Kind::Case2Holds, std::nullopt, 0}; }
    static Assumption min_distance(long d) {
        return Assumption{Kind::MinDistanceAtLeast, std::nullopt, d};
    }

    bool conditional() const { return kind != Kind::Unconditional; }

    std::string str() const {
        switch (kind) {
        case Kind::Unconditional: return "unconditional";
        case Kind::Case1Holds:
            return "some deep hole y has t_1(y) >= " + rat_string(*ell);
        case Kind::Case2Holds:
            return "every deep hole is the complement of a codeword";
        case Kind::MinDistanceAtLeast:
            return "every deep hole is the complement of a codeword and d(C) >= " +
                   std::to_string(d);
        }
        return "?";
    }
};

struct BoundReport {
    BoundKind kind = BoundKind::FL;
    Assumption assumption;
    AlgebraicValue rho_bound;              // lower bound on rho(C)
    Int r_bound = 0;                       // upper bound on R(C), exact floor
    std::optional<RationalPoly> certificate;
    std::map<std::string, std::string> parameters;
};

// free polynomial of the cardinality-dependent bound, kept by its roots;
// A(t) = prod_i (t - a_i), deg A = k - 1
struct CasePolynomial {
    std::vector<Rational> a_params;

    RationalPoly poly() const {
        RationalPoly p = RationalPoly::constant(Rational(1));
        for (const auto& a : a_params) p = p * RationalPoly::linear_root(a);
        return p;
    }
};

// 2^{1-e} sum_{i<=k-1+e} binom(n-1+e, i) with tau = 2k-1+e
inline Int rao_bound(int n, int tau) {
    if (tau < 1 || tau > n) throw std::invalid_argument("rao_bound: need 1 <= tau <= n");
    int e = 1 - tau % 2;
    int k = (tau + 1) / 2;
    Int sum = 0;
    for (int i = 0; i <= k - 1 + e; ++i) sum += binomial(n - 1 + e, i);
    return (e == 1) ? sum : 2 * sum;
}

// strength-only bound: rho is the largest root of Q_k (odd tau = 2k-1) or of
// the boundary family top polynomial (even tau = 2k)
inline BoundReport fl_bound(int n, int tau) {
    if (tau < 1 || tau > n) throw std::invalid_argument("fl_bound: need 1 <= tau <= n");
    int e = 1 - tau % 2;
    int k = (tau + 1) / 2;
    BoundReport rep;
    rep.kind = BoundKind::FL;
    rep.assumption = Assumption::unconditional();
    if (e == 0) {
        KrawtchoukBasis b(n, k);
        auto roots = isolate_roots(b.Q(k), Rational(-1), Rational(1));
        if ((int)roots.size() != k) throw std::logic_error("fl_bound: root count");
        rep.rho_bound = detail::snapped_value(n, roots.back());
    } else {
        KrawtchoukBasis b(n, k + 1);
        rep.rho_bound = detail::snapped_value(
            n, largest_adjacent_root(adjacent_family(b, k, Rational(-1))));
    }
    rep.r_bound = distance_floor(n, rep.rho_bound);
    rep.parameters = {{"n", std::to_string(n)},
                      {"tau", std::to_string(tau)},
                      {"k", std::to_string(k)},
                      {"e", std::to_string(e)}};
    return rep;
}

struct Case1Certificate {
    RationalPoly f;
    Rational s;
};

// (t - ell)(t - r_k + eps) prod_{i<k} (t - r_i)^2 with the adjacent roots
// rounded to denominator 10^12; nonpositivity on [ell, s] survives rounding
// because of the factor structure, positivity of the mean is checked exactly
inline Case1Certificate case1_certificate(std::vector<RootEnclosure> roots, const Rational& ell,
                                          const Rational& eps = Rational(1, 1000)) {
    const Int den = boost::multiprecision::pow(Int(10), 12);
    auto rounded = [&](RootEnclosure& r) {
        r.refine_to(Rational(Int(1), den * 10));
        Rational scaled = r.mid() * Rational(den);
        return Rational(floor_rat(scaled + Rational(1, 2)), den);
    };
    RationalPoly f = RationalPoly::linear_root(ell);
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        RationalPoly lin = RationalPoly::linear_root(rounded(roots[i]));
        f = f * lin * lin;
    }
    Rational s = rounded(roots.back()) - eps;
    f = f * RationalPoly::linear_root(s);
    return {f, s};
}

// conditional improvement: if some deep hole y has t_1(y) >= ell then rho is
// at least the largest root of the top adjacent polynomial for that anchor
inline BoundReport improved_bound_case1(int n, int k, const Rational& ell) {
    KrawtchoukBasis b(n, k + 1);
    EllValidity v = validate_ell(b, k, ell);
    if (!v.valid())
        throw std::domain_error("improved_bound_case1: anchor fails the validity conditions");
    AdjacentFamily fam = adjacent_family(b, k, ell);
    auto roots = adjacent_roots(fam);
    BoundReport rep;
    rep.kind = BoundKind::Case1;
    rep.assumption = Assumption::case1(ell);
    if (k == 1) {
        rep.rho_bound = AlgebraicValue(Rational(-1) / (Rational(n) * ell));
    } else {
        rep.rho_bound = detail::snapped_value(n, roots.back());
    }
    rep.r_bound = distance_floor(n, rep.rho_bound);
    Case1Certificate cert = case1_certificate(roots, ell);
    rep.certificate = cert.f;
    rep.parameters = {{"n", std::to_string(n)},
                      {"k", std::to_string(k)},
                      {"tau", std::to_string(2 * k)},
                      {"ell", rat_string(ell)},
                      {"s", rat_string(cert.s)}};
    return rep;
}

namespace detail {

// rho >= num/den for f = (t + 1 - 2d/n)(t - rho) A^2: num = M mean(t B) - c,
// den = M mean(B) + c with B = (t + 1 - 2d/n) A^2 and c = (2d/n) A(-1)^2
inline std::pair<Rational, Rational> case2_num_den(const KrawtchoukBasis& b, const Int& M, long d,
                                                   const RationalPoly& A) {
    int n = b.n();
    Rational am1 = A.eval(Rational(-1));
    Rational corner = Rational(2 * d, n) * am1 * am1;
    RationalPoly B = RationalPoly({Rational(n - 2 * d, n), Rational(1)}) * A * A;
    Rational num = Rational(M) * b.mean(B * RationalPoly::monomial(1)) - corner;
    Rational den = Rational(M) * b.mean(B) + corner;
    return {num, den};
}

inline void check_case2_shape(int n, int k) {
    if (k < 1 || 2 * k > n) throw std::invalid_argument("case2: need 1 <= k and 2k <= n");
}

inline void check_case2_args(int n, int k, const Int& M) {
    check_case2_shape(n, k);
    if (M < rao_bound(n, 2 * k))
        throw std::invalid_argument("case2: cardinality below the strength-2k minimum");
}

inline Rational case2_value_checked(const KrawtchoukBasis& b, const Int& M, long d,
                                    const RationalPoly& A, const char* what) {
    auto [num, den] = case2_num_den(b, M, d, A);
    if (!(den > 0)) throw std::domain_error(std::string(what) + ": denominator not positive");
    return num / den;
}

inline std::string roots_string(const std::vector<Rational>& rs) {
    std::string out = "[";
    for (size_t i = 0; i < rs.size(); ++i) {
        if (i) out += ", ";
        out += rat_string(rs[i]);
    }
    return out + "]";
}

} // namespace detail

// cardinality-dependent bound for a given free polynomial; for k = 2 and
// A = t - a this is the explicit formula
//   [M(n^2 a^2 - 2n(n-2)a + 3n-2) - 2n^2(1+a)^2] /
//   [nM(n(n-2)a^2 - 2na + n-2) + 2n^2(1+a)^2]
// whose denominator is positive exactly when n >= 4
inline BoundReport case2_bound(int n, int k, const Int& M, const CasePolynomial& A) {
    detail::check_case2_args(n, k, M);
    if ((int)A.a_params.size() != k - 1)
        throw std::invalid_argument("case2_bound: free polynomial must have degree k - 1");
    KrawtchoukBasis b(n, 0);
    Rational q = detail::case2_value_checked(b, M, 1, A.poly(),
                                             "case2_bound (n >= 4 required for k = 2)");
    BoundReport rep;
    rep.kind = BoundKind::Case2;
    rep.assumption = Assumption::case2();
    rep.rho_bound = AlgebraicValue(q);
    rep.r_bound = distance_floor(n, rep.rho_bound);
    rep.parameters = {{"n", std::to_string(n)},
                      {"k", std::to_string(k)},
                      {"M", M.str()},
                      {"a", detail::roots_string(A.a_params)}};
    return rep;
}

// same pipeline with the corner moved from -1 to -1 + 2d/n; valid when the
// minimum distance of the array is at least d
inline BoundReport case2_bound_with_distance(int n, int k, const Int& M, long d,
                                             const CasePolynomial& A) {
    detail::check_case2_shape(n, k);
    if (d < 1 || d > n) throw std::invalid_argument("case2_bound_with_distance: need 1 <= d <= n");
    if ((int)A.a_params.size() != k - 1)
        throw std::invalid_argument("case2_bound_with_distance: degree of A must be k - 1");
    KrawtchoukBasis b(n, 0);
    Rational q = detail::case2_value_checked(b, M, d, A.poly(), "case2_bound_with_distance");
    BoundReport rep;
    rep.kind = BoundKind::Case2WithDistance;
    rep.assumption = Assumption::min_distance(d);
    rep.rho_bound = AlgebraicValue(q);
    rep.r_bound = distance_floor(n, rep.rho_bound);
    rep.parameters = {{"n", std::to_string(n)},
                      {"k", std::to_string(k)},
                      {"M", M.str()},
                      {"d", std::to_string(d)},
                      {"a", detail::roots_string(A.a_params)}};
    return rep;
}

namespace detail {

// quadratic c0 + c1 a + c2 a^2 through values at a = -1, 0, 1
inline RationalPoly quad_through(const Rational& vm, const Rational& v0, const Rational& vp) {
    return RationalPoly({v0, (vp - vm) / 2, (vp + vm) / 2 - v0});
}

// num and den of the bound as quadratics in the root a_i of A, all other
// roots held fixed
inline std::pair<RationalPoly, RationalPoly> coordinate_quadratics(
    const KrawtchoukBasis& b, const Int& M, long d, const std::vector<Rational>& roots,
    size_t idx) {
    Rational num[3], den[3];
    const Rational samples[3] = {Rational(-1), Rational(0), Rational(1)};
    for (int s = 0; s < 3; ++s) {
        RationalPoly A = RationalPoly::constant(Rational(1));
        for (size_t j = 0; j < roots.size(); ++j)
            A = A * RationalPoly::linear_root(j == idx ? samples[s] : roots[j]);
        auto nd = case2_num_den(b, M, d, A);
        num[s] = nd.first;
        den[s] = nd.second;
    }
    return {quad_through(num[0], num[1], num[2]), quad_through(den[0], den[1], den[2])};
}

inline QuadExt eval_quad(const RationalPoly& p, const QuadExt& x) {
    QuadExt acc(Rational(0));
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + QuadExt(p.coeff(i));
    return acc;
}

} // namespace detail

// best free polynomial for the cardinality-dependent bound. k = 1 has no
// freedom; k = 2 is solved exactly via the stationary points of the rational
// function; k >= 3 runs a deterministic coordinate ascent and the result is
// labeled as a heuristic.
inline std::pair<CasePolynomial, BoundReport> optimize_case2(int n, int k, const Int& M,
                                                             long d = 1) {
    detail::check_case2_args(n, k, M);
    if (d < 1 || d > n) throw std::invalid_argument("optimize_case2: need 1 <= d <= n");
    KrawtchoukBasis b(n, 0);
    BoundKind kind = d == 1 ? BoundKind::Case2 : BoundKind::Case2WithDistance;
    Assumption assume = d == 1 ? Assumption::case2() : Assumption::min_distance(d);

    if (k == 1) {
        CasePolynomial A;
        BoundReport rep = d == 1 ? case2_bound(n, k, M, A)
                                 : case2_bound_with_distance(n, k, M, d, A);
        return {A, rep};
    }

    if (k == 2) {
        std::vector<Rational> root{Rational(0)};
        auto [N, D] = detail::coordinate_quadratics(b, M, d, root, 0);
        RationalPoly S = N.derivative() * D - N * D.derivative();
        if (S.degree() > 2) throw std::logic_error("optimize_case2: stationary degree");
        std::vector<QuadExt> cands;
        if (S.degree() >= 1)
            cands = solve_quadratic(S.coeff(2), S.coeff(1), S.coeff(0));
        if (cands.empty()) cands.push_back(QuadExt(Rational(0)));
        QuadExt best_a = cands.front();
        QuadExt best_q = detail::eval_quad(N, best_a) / detail::eval_quad(D, best_a);
        for (size_t i = 1; i < cands.size(); ++i) {
            QuadExt q = detail::eval_quad(N, cands[i]) / detail::eval_quad(D, cands[i]);
            if (q > best_q) {
                best_q = q;
                best_a = cands[i];
            }
        }
        // value escaping to a -> +-infinity; both limits coincide
        Rational limit = N.coeff(2) / D.coeff(2);

        BoundReport rep;
        rep.kind = kind;
        rep.assumption = assume;
        rep.rho_bound = AlgebraicValue::from_quadext(best_q);
        rep.r_bound = distance_floor(n, rep.rho_bound);
        rep.parameters = {{"n", std::to_string(n)},
                          {"k", std::to_string(k)},
                          {"M", M.str()},
                          {"a", best_a.str()},
                          {"q_limit", rat_string(limit)}};
        if (d != 1) rep.parameters["d"] = std::to_string(d);
        if (best_q.compare_to(limit) < 0)
            rep.parameters["note"] = "supremum approached only as a -> infinity";

        CasePolynomial A;
        if (best_a.is_rational()) {
            A.a_params = {best_a.rational_value()};
        } else {
            RootEnclosure e = best_a.enclosure();
            const Int den10 = boost::multiprecision::pow(Int(10), 12);
            e.refine_to(Rational(Int(1), den10 * 10));
            A.a_params = {Rational(floor_rat(e.mid() * Rational(den10) + Rational(1, 2)), den10)};
        }
        return {A, rep};
    }

    // k >= 3: coordinate ascent over the k - 1 roots, 32 deterministic
    // restarts. Candidate roots are rounded onto a fixed dyadic grid so the
    // rational arithmetic stays bounded across sweeps.
    const Int grid_den = 4096;
    auto value = [&](const std::vector<Rational>& roots) -> std::optional<Rational> {
        RationalPoly A = RationalPoly::constant(Rational(1));
        for (const auto& a : roots) A = A * RationalPoly::linear_root(a);
        auto [num, den] = detail::case2_num_den(b, M, d, A);
        if (!(den > 0)) return std::nullopt;
        return num / den;
    };
    auto snap = [&](const QuadExt& q) {
        if (q.is_rational() && denominator(q.rational_value()) <= grid_den)
            return q.rational_value();
        RootEnclosure e = q.enclosure();
        e.refine_to(Rational(Int(1), 2 * grid_den));
        return Rational(floor_rat(e.mid() * Rational(grid_den) + Rational(1, 2)), grid_den);
    };
    std::vector<Rational> best_roots(k - 1, Rational(0));
    std::optional<Rational> best = value(best_roots);
    const int restarts = 32;
    for (int r = 0; r < restarts; ++r) {
        std::vector<Rational> cur(k - 1, Rational(2 * r + 1 - restarts, restarts));
        auto curval = value(cur);
        if (!curval) continue;
        for (int sweep = 0; sweep < 16; ++sweep) {
            bool improved = false;
            for (size_t i = 0; i < cur.size(); ++i) {
                auto [N, D] = detail::coordinate_quadratics(b, M, d, cur, i);
                RationalPoly S = N.derivative() * D - N * D.derivative();
                if (S.degree() < 1) continue;
                for (const QuadExt& q : solve_quadratic(S.coeff(2), S.coeff(1), S.coeff(0))) {
                    std::vector<Rational> probe = cur;
                    probe[i] = snap(q);
                    auto v = value(probe);
                    if (v && *v > *curval) {
                        cur = probe;
                        curval = v;
                        improved = true;
                    }
                }
            }
            if (!improved) break;
        }
        if (curval && (!best || *curval > *best)) {
            best = curval;
            best_roots = cur;
        }
    }
    if (!best) throw std::domain_error("optimize_case2: no admissible free polynomial found");
    BoundReport rep;
    rep.kind = kind;
    rep.assumption = assume;
    rep.rho_bound = AlgebraicValue(*best);
    rep.r_bound = distance_floor(n, rep.rho_bound);
    rep.parameters = {{"n", std::to_string(n)},
                      {"k", std::to_string(k)},
                      {"M", M.str()},
                      {"a", detail::roots_string(best_roots)},
                      {"method", "coordinate-ascent heuristic"}};
    if (d != 1) rep.parameters["d"] = std::to_string(d);
    return {CasePolynomial{best_roots}, rep};
}

// unconditional combination: one of the two cases always applies, so rho is
// at least the worse of the two case bounds
inline BoundReport universal_bound(int n, int k, const Int& M, const Rational& ell,
                                   std::optional<long> d = std::nullopt) {
    BoundReport c1 = improved_bound_case1(n, k, ell);
    BoundReport c2 = optimize_case2(n, k, M, d.value_or(1)).second;
    BoundReport rep;
    rep.kind = BoundKind::Universal;
    rep.assumption = Assumption::unconditional();
    int cmp = c1.rho_bound.compare(c2.rho_bound);
    rep.rho_bound = cmp <= 0 ? c1.rho_bound : c2.rho_bound;
    rep.r_bound = c1.r_bound > c2.r_bound ? c1.r_bound : c2.r_bound;
    rep.parameters = {{"n", std::to_string(n)},
                      {"k", std::to_string(k)},
                      {"M", M.str()},
                      {"ell", rat_string(ell)},
                      {"binding_case", cmp <= 0 ? "case1" : "case2"}};
    if (d) rep.parameters["d"] = std::to_string(*d);
    return rep;
}

// report for a hand-supplied linear programming certificate
struct CertificateReport {
    bool degree_ok = false;      // deg f <= tau
    bool nonpositive_ok = false; // f <= 0 on [lo, s]
    bool mean_positive = false;  // f_0 > 0
    Rational lo;                 // -1, or the anchor when one is supplied
    Rational s;                  // implied bound: rho >= s when all three hold
    bool ok() const { return degree_ok && nonpositive_ok && mean_positive; }
};

// checks deg f <= tau, f <= 0 on [lo, s] by exact root isolation and sign
// tests, and f_0 > 0 by the exact grid sum; failures are reported, not thrown
inline CertificateReport certify_with_polynomial(const RationalPoly& f, int n, int tau,
                                                 const Rational& s,
                                                 std::optional<Rational> ell = std::nullopt) {
    CertificateReport rep;
    rep.lo = ell.value_or(Rational(-1));
    rep.s = s;
    rep.degree_ok = f.degree() <= tau;
    KrawtchoukBasis b(n, 0);
    rep.mean_positive = b.mean(f) > 0;
    if (f.degree() < 0) { // zero polynomial
        rep.nonpositive_ok = true;
        return rep;
    }
    if (s < rep.lo) { // empty domain
        rep.nonpositive_ok = true;
        return rep;
    }
    bool nonpos = sign_at(f, rep.lo) <= 0 && sign_at(f, s) <= 0;
    if (nonpos && s > rep.lo) {
        // sign is constant between consecutive root enclosures; sampling each
        // gap (plus the endpoints above) covers the whole interval
        auto rts = isolate_roots(f, rep.lo, s);
        Rational prev = rep.lo;
        for (const auto& r : rts) {
            if (r.lo > prev && sign_at(f, (prev + r.lo) / 2) > 0) nonpos = false;
            prev = r.hi;
        }
        if (prev < s && sign_at(f, (prev + s) / 2) > 0) nonpos = false;
    }
    rep.nonpositive_ok = nonpos;
    return rep;
}

} // namespace oacr

#endif
