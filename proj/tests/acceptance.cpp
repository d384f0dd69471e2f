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

// Release gate. Each numbered check prints exactly one PASS/FAIL line;
// the exit code is the number of failures. Tolerances are pinned here:
// exact comparisons everywhere, enclosure width below 1e-30 where a value
// is irrational, and wall-clock caps on the checks that carry one.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <oacr/adjacent.hpp>
#include <oacr/bounds.hpp>
#include <oacr/codes.hpp>
#include <oacr/families.hpp>

using namespace oacr;

namespace {

Rational rat(long p, long q = 1) { return Rational(p, q); }

const Rational& eps30() {
    static const Rational e(Int(1), Int(boost::multiprecision::pow(Int(10), 30)));
    return e;
}

const Rational& eps31() {
    static const Rational e(Int(1), Int(boost::multiprecision::pow(Int(10), 31)));
    return e;
}

bool fail_at(std::string& note, int n, int idx, const char* what) {
    note = std::string(what) + " at n=" + std::to_string(n) + ", index " + std::to_string(idx);
    return false;
}

// ---- 1: closed-form strength-only bounds ----------------------------------
// rho closed forms, tau = 2k-1+e:
//   1: 0                 2: 1/n
//   3: (nt)^2 = n        4: (nt-1)^2 = n-1
//   5: (nt)^2 = 3n-2     6: (nt-1)^2 = 3n-5
//   7: ((nt)^2-(3n-4))^2 = 6n^2-18n+16, inner radicand positive
//   8: ((nt-1)^2-(3n-7))^2 = 6n^2-30n+40, inner radicand positive
// and R = floor(n (1 - rho) / 2) in all eight cases.
bool criterion1(std::string& note) {
    int count = 0;
    for (int n : {8, 15, 16, 17, 31, 32, 64}) {
        for (int tau = 1; tau <= 8; ++tau) {
            BoundReport rep = fl_bound(n, tau);
            RationalPoly nt({rat(0), rat(n)});
            RationalPoly nt1({rat(-1), rat(n)});
            RationalPoly P;
            std::vector<RationalPoly> positive;
            std::optional<Rational> closed;
            switch (tau) {
            case 1: closed = rat(0); break;
            case 2: closed = Rational(1, n); break;
            case 3:
                P = nt * nt - RationalPoly::constant(rat(n));
                positive.push_back(nt);
                break;
            case 4:
                P = nt1 * nt1 - RationalPoly::constant(rat(n - 1));
                positive.push_back(nt1);
                break;
            case 5:
                P = nt * nt - RationalPoly::constant(rat(3 * n - 2));
                positive.push_back(nt);
                break;
            case 6:
                P = nt1 * nt1 - RationalPoly::constant(rat(3 * n - 5));
                positive.push_back(nt1);
                break;
            case 7: {
                RationalPoly G = nt * nt - RationalPoly::constant(rat(3 * n - 4));
                P = G * G - RationalPoly::constant(rat(6 * n * n - 18 * n + 16));
                positive.push_back(G);
                positive.push_back(nt);
                break;
            }
            case 8: {
                RationalPoly H = nt1 * nt1 - RationalPoly::constant(rat(3 * n - 7));
                P = H * H - RationalPoly::constant(rat(6 * n * n - 30 * n + 40));
                positive.push_back(H);
                positive.push_back(nt1);
                break;
            }
            }

            AlgebraicValue rho = rep.rho_bound;
            if (closed) {
                if (!rho.is_rational() || rho.rational_value() != *closed)
                    return fail_at(note, n, tau, "rational closed form");
            } else if (rho.is_rational()) {
                const Rational& r = rho.rational_value();
                if (P.eval(r) != 0) return fail_at(note, n, tau, "squared identity");
                for (const auto& g : positive)
                    if (g.eval(r) <= 0) return fail_at(note, n, tau, "branch sign");
            } else {
                AlgebraicValue v = rho;
                v.refine_to(eps31());
                const RootEnclosure& e = v.root();
                if (e.hi - e.lo >= eps30()) return fail_at(note, n, tau, "enclosure width");
                if (sign_of(P.eval(e.lo)) * sign_of(P.eval(e.hi)) != -1)
                    return fail_at(note, n, tau, "squared identity");
                for (const auto& g : positive)
                    if (sign_of(g.eval(e.lo)) <= 0 || sign_of(g.eval(e.hi)) <= 0)
                        return fail_at(note, n, tau, "branch sign");
            }

            long r = rep.r_bound.convert_to<long>();
            AlgebraicValue v1 = rep.rho_bound, v2 = rep.rho_bound;
            if (v1.compare_to(Rational(n - 2 * r, n)) > 0)
                return fail_at(note, n, tau, "distance floor too small");
            if (v2.compare_to(Rational(n - 2 * (r + 1), n)) != 1)
                return fail_at(note, n, tau, "distance floor not tight");
            ++count;
        }
    }
    note = std::to_string(count) + " (n, tau) closed forms matched, width < 1e-30";
    return true;
}

// ---- 2-6: family instances ------------------------------------------------

bool bch15(std::string& note) {
    if (lower_bound_bch(2, 4).value != 3) { note = "lower != 3"; return false; }
    if (fl_bound(15, 4).r_bound != 5) { note = "strength-only != 5"; return false; }
    BoundReport c1 = improved_bound_case1(15, 2, rat(-11, 15));
    if (c1.r_bound != 4 || c1.assumption.kind != Assumption::Kind::Case1Holds) {
        note = "conditional bound != 4";
        return false;
    }
    int r = covering_radius_exact(construct_bch_dual(2, 4));
    if (r < 3 || r > 4) { note = "exact radius outside [3,4]"; return false; }
    note = "lower 3, upper 5, conditional 4, exact " + std::to_string(r);
    return true;
}

bool bch31(std::string& note) {
    if (lower_bound_bch(2, 5).value != 10) { note = "lower != 10"; return false; }
    if (fl_bound(31, 4).r_bound != 12) { note = "strength-only != 12"; return false; }
    BoundReport c1 = improved_bound_case1(31, 2, rat(-19, 31));
    if (c1.r_bound != 11 || c1.assumption.kind != Assumption::Kind::Case1Holds) {
        note = "conditional bound != 11";
        return false;
    }
    int r = covering_radius_exact(construct_bch_dual(2, 5));
    if (r < 10 || r > 11) { note = "exact radius outside [10,11]"; return false; }
    note = "lower 10, upper 12, conditional 11, exact " + std::to_string(r) +
           " over 2^21 cosets";
    return true;
}

bool melas15(std::string& note) {
    if (lower_bound_melas(4).value != 4) { note = "lower != 4"; return false; }
    if (fl_bound(15, 2).r_bound != 7) { note = "strength-only != 7"; return false; }
    BoundReport c1 = improved_bound_case1(15, 1, rat(-1, 5));
    if (c1.r_bound != 5 || c1.assumption.kind != Assumption::Kind::Case1Holds) {
        note = "conditional bound != 5";
        return false;
    }
    int r = covering_radius_exact(construct_melas_dual(4));
    if (r < 4 || r > 5) { note = "exact radius outside [4,5]"; return false; }
    note = "lower 4, upper 7, conditional 5, exact " + std::to_string(r);
    return true;
}

bool zetterberg17(std::string& note) {
    if (lower_bound_zetterberg(2).value != 5) { note = "lower != 5"; return false; }
    if (fl_bound(17, 4).r_bound != 6) { note = "strength-only != 6"; return false; }
    BoundReport u = universal_bound(17, 2, Int(256), rat(-15, 17), std::nullopt);
    if (u.r_bound != 5 || u.assumption.kind != Assumption::Kind::Unconditional) {
        note = "unconditional bound != 5";
        return false;
    }
    int r = covering_radius_exact(construct_zetterberg_dual(2));
    if (r != 5) { note = "exact radius != 5"; return false; }
    note = "lower = unconditional upper = exact = 5";
    return true;
}

bool zetterberg65(std::string& note) {
    if (lower_bound_zetterberg(3).value != 25) { note = "lower != 25"; return false; }
    if (fl_bound(65, 4).r_bound != 28) { note = "strength-only != 28"; return false; }
    BoundReport u = universal_bound(65, 2, Int(4096), rat(-63, 65), std::nullopt);
    if (u.r_bound != 27 || u.assumption.kind != Assumption::Kind::Unconditional) {
        note = "unconditional bound != 27";
        return false;
    }
    bool refused = false;
    try {
        covering_radius_exact(construct_zetterberg_dual(3));
    } catch (const std::domain_error&) {
        refused = true;
    }
    if (!refused) { note = "2^53-coset enumeration was not refused"; return false; }
    note = "bracket [25,27], exact not verified (size)";
    return true;
}

// ---- 7: tight-case anchors ------------------------------------------------

bool criterion7(std::string& note) {
    auto [poly, rep] = optimize_case2(5, 2, Int(16));
    if (poly.a_params.size() != 1 || poly.a_params[0] != rat(-1, 5)) {
        note = "free root != -1/5";
        return false;
    }
    if (!rep.rho_bound.is_rational() || rep.rho_bound.rational_value() != rat(3, 5)) {
        note = "optimized value != 3/5";
        return false;
    }
    BoundReport fl = fl_bound(5, 4);
    if (!fl.rho_bound.is_rational() || fl.rho_bound.rational_value() != rat(3, 5)) {
        note = "strength-only value != 3/5";
        return false;
    }
    for (int n : {7, 11, 15}) {
        BoundReport cb = case2_bound(n, 1, Int(n + 1), CasePolynomial{});
        if (!cb.rho_bound.is_rational() || cb.rho_bound.rational_value() != Rational(1, n)) {
            note = "k=1 tight value != 1/" + std::to_string(n);
            return false;
        }
    }
    note = "optimum -1/5 meets the strength-only value; k=1 anchors exact";
    return true;
}

// ---- 8 & 9: quadrature and interlacing grid -------------------------------

template <class Fn> bool for_grid(std::string& note, Fn&& fn) {
    for (int k = 1; k <= 4; ++k)
        for (int n = 2 * (k + 1); n <= 31; ++n) {
            KrawtchoukBasis b(n, k + 1);
            std::vector<Rational> cand = {Rational(2 - n, n), window_midpoint_anchor(b, k)};
            for (const Rational& ell : cand) {
                if (!validate_ell(b, k, ell).valid()) continue;
                if (!fn(b, n, k, ell, note)) return false;
            }
        }
    return true;
}

bool moments_match(const QuadratureRule& rule, const KrawtchoukBasis& b, int up,
                   std::string& note, int n, int k) {
    for (const auto& w : rule.weights)
        if (!w.certainly_positive())
            return fail_at(note, n, k, "weight not certified positive");
    for (int d = 0; d <= up; ++d) {
        RatInterval got = apply_rule(rule, RationalPoly::monomial(d));
        if (!got.contains(b.mean(RationalPoly::monomial(d))))
            return fail_at(note, n, k, "moment mismatch");
        if (got.width() >= eps30()) return fail_at(note, n, k, "moment enclosure too wide");
    }
    return true;
}

bool criterion8(std::string& note) {
    int rules = 0;
    for (int k = 1; k <= 4; ++k)
        for (int n = 2 * (k + 1); n <= 31; ++n) {
            KrawtchoukBasis b(n, k + 1);
            QuadratureRule g = gauss_like_rule(b, k);
            if (g.exact_degree != 2 * k - 1) return fail_at(note, n, k, "gauss degree");
            refine_rule(g, b, eps31());
            if (!moments_match(g, b, 2 * k - 1, note, n, k)) return false;
            ++rules;
        }
    bool ok = for_grid(note, [&](const KrawtchoukBasis& b, int n, int k, const Rational& ell,
                                 std::string& why) {
        QuadratureRule rule = adjacent_rule(b, k, ell);
        if (rule.exact_degree != 2 * k) return fail_at(why, n, k, "adjacent degree");
        refine_rule(rule, b, eps31());
        if (!moments_match(rule, b, 2 * k, why, n, k)) return false;
        ++rules;
        return true;
    });
    if (!ok) return false;
    if (rules == 0) { note = "empty grid"; return false; }
    note = std::to_string(rules) + " rules exact, weights positive, width < 1e-30";
    return true;
}

bool criterion9(std::string& note) {
    int checked = 0, windows = 0;
    // the middle dominance step is cut-free: largest (k+1)-row zero above the
    // even-strength bound value, for every (n, k) on the grid
    for (int k = 1; k <= 4; ++k)
        for (int n = 2 * (k + 1); n <= 31; ++n) {
            KrawtchoukBasis b(n, k + 1);
            RootEnclosure top = isolate_roots(b.Q(k + 1), rat(-1), rat(1)).back();
            AlgebraicValue mv(top), fv = fl_bound(n, 2 * k).rho_bound;
            if (mv.compare(fv) != 1) return fail_at(note, n, k, "row k+1 above even bound");
        }
    bool ok = for_grid(note, [&](const KrawtchoukBasis& b, int n, int k, const Rational& ell,
                                 std::string& why) {
        AdjacentFamily fam = adjacent_family(b, k, ell);
        InterlacingReport rep = check_interlacing(b, fam);
        if (!rep.ok()) return fail_at(why, n, k, "interlacing");
        if (rep.regime == EllRegime::Window) {
            ++windows;
            if (!rep.dominance_applicable || !rep.dominance_ok)
                return fail_at(why, n, k, "window dominance");
            RootEnclosure top = largest_adjacent_root(fam);
            RootEnclosure next = isolate_roots(b.Q(k + 1), rat(-1), rat(1)).back();
            AlgebraicValue tv(top), nv(next);
            if (tv.compare(nv) != 1) return fail_at(why, n, k, "strict dominance");
        }
        ++checked;
        return true;
    });
    if (!ok) return false;
    if (checked == 0 || windows == 0) { note = "empty grid"; return false; }
    note = std::to_string(checked) + " cuts interlace, " + std::to_string(windows) +
           " window cuts dominate strictly";
    return true;
}

// ---- 10: distance-distribution identity -----------------------------------

bool criterion10(std::string& note) {
    struct Inst {
        const char* label;
        BinaryLinearCode oa;
        int tau;
    };
    std::vector<Inst> insts;
    insts.push_back({"bch e=2 m=4", construct_bch_dual(2, 4), 4});
    insts.push_back({"melas m=4", construct_melas_dual(4), 2});
    insts.push_back({"zetterberg m=2", construct_zetterberg_dual(2), 4});

    std::mt19937_64 rng(777);
    int checks = 0;
    for (const Inst& inst : insts) {
        int n = inst.oa.n();
        KrawtchoukBasis b(n, inst.tau);
        for (int t = 0; t < 100; ++t) {
            BitVec y(n);
            for (int i = 0; i < n; ++i)
                if (rng() & 1) y.set(i, true);
            for (int j = 0; j <= inst.tau; ++j) {
                if (!delsarte_identity_check(inst.oa, y, b.Q(j))) {
                    note = std::string("identity fails for ") + inst.label + " degree " +
                           std::to_string(j);
                    return false;
                }
                ++checks;
            }
        }
    }
    note = std::to_string(checks) + " exact identities over 3 instances, fixed seed";
    return true;
}

// ---- 11: two covering-radius oracles --------------------------------------

BinaryLinearCode random_code(std::mt19937_64& rng, int n, int dim) {
    std::vector<BitVec> rows;
    for (int r = 0; r < dim; ++r) {
        BitVec row(n);
        for (int i = 0; i < n; ++i)
            if (rng() & 1) row.set(i, true);
        rows.push_back(row);
    }
    return BinaryLinearCode(n, std::move(rows));
}

bool criterion11(std::string& note) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
        int n = 5 + (int)(rng() % 10);
        int dim = 1 + (int)(rng() % (n - 1));
        BinaryLinearCode c = random_code(rng, n, dim);
        if (covering_radius_exact(c) != covering_radius_full_space(c)) {
            note = "oracles disagree at trial " + std::to_string(t);
            return false;
        }
    }
    note = "coset enumeration equals full-space search on 20 random codes";
    return true;
}

// ---- 12: point-count windows ----------------------------------------------

bool criterion12(std::string& note) {
    for (int m : {4, 5}) {
        FieldSpec F = field(m);
        long q = 1l << m;
        long s = Int(isqrt(pow2_int((unsigned)(m + 2)))).convert_to<long>();
        long wlo = (q - 1 - s + 1) / 2; // ceil
        long whi = (q - 1 + s) / 2;     // floor
        long mn = q;
        for (FieldElement a = 1; a < (FieldElement)q; ++a)
            for (FieldElement b = 1; b < (FieldElement)q; ++b) {
                long v = melas_point_count(F, a, b);
                if (v < wlo || v > whi) {
                    note = "count outside window at m=" + std::to_string(m);
                    return false;
                }
                mn = std::min(mn, v);
            }
        if (Rational(mn) < lower_bound_melas(m).raw.rational_value()) {
            note = "minimum below the pre-rounding bound at m=" + std::to_string(m);
            return false;
        }
        if (mn != (m == 4 ? 5 : 11)) {
            note = "census minimum drifted at m=" + std::to_string(m);
            return false;
        }
    }
    UnitCircle uc = unit_circle_generator(2);
    int parts = 0;
    for (FieldElement a1 : subfield_nonzero_elements(uc)) {
        if (!partition_lemma_check(uc, a1)) {
            note = "partition structure fails";
            return false;
        }
        ++parts;
    }
    note = "censuses inside windows, minima 5 and 11, " + std::to_string(parts) +
           " partition checks";
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double cap_seconds; // 0 = uncapped
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    std::vector<Criterion> cs = {
        {1, "closed-form strength-only bounds, 7 lengths x strengths 1..8", 10.0, criterion1},
        {2, "bch dual n=15: bounds and exact radius", 1.0, bch15},
        {3, "bch dual n=31: bounds and exact radius", 300.0, bch31},
        {4, "melas dual n=15: bounds and exact radius", 1.0, melas15},
        {5, "zetterberg dual n=17: closed sandwich", 1.0, zetterberg17},
        {6, "zetterberg dual n=65: bracket only", 0.0, zetterberg65},
        {7, "tight-case anchors for the cardinality bound", 0.0, criterion7},
        {8, "quadrature exactness and certified positivity", 0.0, criterion8},
        {9, "interlacing and strict dominance on the cut grid", 0.0, criterion9},
        {10, "distance-distribution identity on family instances", 0.0, criterion10},
        {11, "covering-radius oracle agreement", 0.0, criterion11},
        {12, "point-count windows and partition structure", 30.0, criterion12},
    };

    int failures = 0;
    for (Criterion& c : cs) {
        std::string note;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.cap_seconds > 0 && el > c.cap_seconds) {
            ok = false;
            note += " (over " + std::to_string((long)c.cap_seconds) + "s cap)";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "PASS" : "FAIL") << " " << (c.id < 10 ? " " : "") << c.id << "  "
             << c.label << ": " << note << " [" << el << "s]";
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }

    // informational, not gated: the family lower bounds grow monotonically
    std::ostringstream trend;
    trend << "INFO     lower-bound trend, zetterberg m=2..6:";
    for (int m = 2; m <= 6; ++m) trend << " " << lower_bound_zetterberg(m).value;
    trend << "; melas m=4..8:";
    for (int m = 4; m <= 8; ++m) trend << " " << lower_bound_melas(m).value;
    std::cout << trend.str() << std::endl;

    return failures;
}
