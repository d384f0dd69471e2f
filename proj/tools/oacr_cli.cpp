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

// Command-line front end. Exit codes: 0 success, 2 invalid input,
// 3 instance too large for an exact computation (a partial report is
// still written to stdout).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <oacr/adjacent.hpp>
#include <oacr/bounds.hpp>
#include <oacr/codes.hpp>
#include <oacr/families.hpp>
#include <oacr/report.hpp>

using namespace oacr;

namespace {

enum class OutFmt { Markdown, Json, Csv };

void add_format_flags(CLI::App* cmd, bool& json, bool& csv) {
    cmd->add_flag("--json", json, "machine-readable JSON report");
    cmd->add_flag("--csv", csv, "comma-separated rows");
}

OutFmt pick_format(bool json, bool csv) {
    if (json) return OutFmt::Json;
    if (csv) return OutFmt::Csv;
    return OutFmt::Markdown;
}

void emit(const Report& rep, OutFmt fmt) {
    switch (fmt) {
    case OutFmt::Json: std::cout << to_json_string(rep); break;
    case OutFmt::Csv: std::cout << to_csv(rep); break;
    case OutFmt::Markdown: std::cout << to_markdown(rep); break;
    }
}

// "p/q" exact rational, or "tJ" for the grid point -1 + 2J/n
Rational parse_ell(const std::string& s, int n) {
    if (s.size() >= 2 && (s[0] == 't' || s[0] == 'T')) {
        long j = std::stol(s.substr(1));
        if (j < 1 || j >= n) throw std::invalid_argument("ell: grid index out of range");
        return Rational(2 * j - n, n);
    }
    return Rational(s);
}

std::string grid_name(int n, const Rational& ell) {
    Rational j = (ell + 1) * n / 2;
    if (denominator(j) == 1) return "t" + numerator(j).str();
    return rat_string(ell);
}

// ---- bounds ---------------------------------------------------------------

struct BoundsArgs {
    int n = 0;
    int tau = 0; // 0 = not given
    int k = -1;  // -1 = not given
    std::string m_str;
    std::string ell_str;
    long d = 0; // 0 = not given
};

int run_bounds(const BoundsArgs& a, OutFmt fmt) {
    if (a.k != -1 && a.k < 1) {
        std::cerr << "bounds: level count k must be >= 1\n";
        return 2;
    }
    if (a.tau == 0 && a.k == -1) {
        std::cerr << "bounds: give a strength (-t) or a level count (-k)\n";
        return 2;
    }
    int tau = a.tau > 0 ? a.tau : 2 * a.k;
    int k = a.k != -1 ? a.k : tau / 2;
    if (a.tau > 0 && a.k > 0 && 2 * a.k > a.tau) {
        std::cerr << "bounds: k levels need strength >= 2k\n";
        return 2;
    }
    std::optional<Int> M;
    if (!a.m_str.empty()) {
        M = Int(a.m_str);
        if (*M < 2) throw std::invalid_argument("bounds: cardinality must be >= 2");
    }
    std::optional<long> d;
    if (a.d != 0) {
        if (a.d < 1) throw std::invalid_argument("bounds: min distance must be >= 1");
        d = a.d;
    }

    Report rep;
    rep.command = "bounds";
    rep.inputs["n"] = std::to_string(a.n);
    rep.inputs["tau"] = std::to_string(tau);
    rep.inputs["k"] = std::to_string(k);
    if (M) rep.inputs["M"] = M->str();
    if (d) rep.inputs["d"] = std::to_string(*d);
    if (!a.ell_str.empty()) rep.inputs["ell"] = a.ell_str;

    {
        ReportEntry rao;
        rao.kind = "rao";
        Int mmin = rao_bound(a.n, tau);
        rao.params["min_cardinality"] = mmin.str();
        rep.results.push_back(rao);
        if (M && *M < mmin)
            rep.notes.push_back("cardinality is below the minimum admitted by the strength");
    }

    {
        BoundReport fl = fl_bound(a.n, tau);
        ReportEntry e = entry_from(fl);
        e.params["n"] = std::to_string(a.n);
        e.params["tau"] = std::to_string(tau);
        rep.results.push_back(e);
    }

    // candidate ell list: the explicit one, or every valid grid point
    std::vector<Rational> ells;
    if (k < 1) {
        // strength 1 admits no adjacent-level machinery; done
        emit(rep, fmt);
        return 0;
    }
    if (!a.ell_str.empty()) {
        ells.push_back(parse_ell(a.ell_str, a.n));
    } else if (2 * (k + 1) <= a.n + 1) {
        KrawtchoukBasis basis(a.n, k + 1);
        for (int j = 1; j < a.n; ++j) {
            Rational ell(2 * j - a.n, a.n);
            if (ell >= 0) break;
            if (validate_ell(basis, k, ell).valid()) ells.push_back(ell);
        }
        if (!ells.empty())
            rep.notes.push_back("ell swept over " + std::to_string(ells.size()) +
                                " valid grid points");
    }

    auto tag = [&](ReportEntry e, const Rational& ell) {
        e.params["ell"] = rat_string(ell);
        e.params["ell_grid"] = grid_name(a.n, ell);
        e.params["k"] = std::to_string(k);
        return e;
    };

    std::optional<BoundReport> best1;
    std::optional<Rational> best1_ell;
    for (const Rational& ell : ells) {
        BoundReport c1 = improved_bound_case1(a.n, k, ell);
        if (!best1 || c1.r_bound < best1->r_bound) {
            best1 = c1;
            best1_ell = ell;
        }
    }
    if (best1) rep.results.push_back(tag(entry_from(*best1), *best1_ell));

    if (M) {
        auto [poly, c2] = optimize_case2(a.n, k, *M, d.value_or(1));
        ReportEntry e = entry_from(c2);
        e.params["k"] = std::to_string(k);
        std::string roots;
        for (const Rational& r : poly.a_params)
            roots += (roots.empty() ? "" : ", ") + rat_string(r);
        e.params["free_roots"] = roots;
        rep.results.push_back(e);

        std::optional<BoundReport> bestu;
        std::optional<Rational> bestu_ell;
        for (const Rational& ell : ells) {
            BoundReport u = universal_bound(a.n, k, *M, ell, d);
            if (!bestu || u.r_bound < bestu->r_bound) {
                bestu = u;
                bestu_ell = ell;
            }
        }
        if (bestu) {
            ReportEntry e2 = tag(entry_from(*bestu), *bestu_ell);
            e2.params["M"] = M->str();
            rep.results.push_back(e2);
        }
    }

    emit(rep, fmt);
    return 0;
}

// ---- construct ------------------------------------------------------------

int run_construct(const std::string& family, int e, int m, std::string out, OutFmt fmt) {
    ConstructionParams p = ConstructionParams::bch(1, 1);
    BinaryLinearCode oa(1, {});
    if (family == "bch") {
        p = ConstructionParams::bch(e, m);
        oa = construct_bch_dual(e, m);
    } else if (family == "melas") {
        p = ConstructionParams::melas(m);
        oa = construct_melas_dual(m);
    } else if (family == "zetterberg") {
        p = ConstructionParams::zetterberg(m);
        oa = construct_zetterberg_dual(m);
    } else {
        std::cerr << "construct: unknown family '" << family << "'\n";
        return 2;
    }

    if (out.empty()) {
        out = family + (family == "bch" ? "-e" + std::to_string(e) : "") + "-m" +
              std::to_string(m) + ".code";
    }

    int tau = strength(oa);
    Int M = pow2_int((unsigned)oa.dim());
    if (oa.n() != p.n || M != p.expected_M || tau < p.expected_tau)
        throw std::logic_error("construct: instance does not meet its advertised parameters");

    std::ofstream os(out);
    if (!os) {
        std::cerr << "construct: cannot write '" << out << "'\n";
        return 2;
    }
    write_code(os, oa);

    Report rep;
    rep.command = "construct";
    rep.inputs["family"] = family;
    if (family == "bch") rep.inputs["e"] = std::to_string(e);
    rep.inputs["m"] = std::to_string(m);
    rep.inputs["out"] = out;

    ReportEntry en;
    en.kind = "construction";
    en.params["n"] = std::to_string(oa.n());
    en.params["dim"] = std::to_string(oa.dim());
    en.params["M"] = M.str();
    en.params["tau"] = std::to_string(tau);
    rep.results.push_back(en);
    rep.notes.push_back("strength verified by dual minimum distance: tau = " +
                        std::to_string(tau));
    rep.notes.push_back("wrote " + out);

    emit(rep, fmt);
    return 0;
}

// ---- radius ---------------------------------------------------------------

int run_radius(const std::string& path, OutFmt fmt) {
    std::ifstream is(path);
    if (!is) {
        std::cerr << "radius: cannot read '" << path << "'\n";
        return 2;
    }
    BinaryLinearCode c = read_code(is);

    Report rep;
    rep.command = "radius";
    rep.inputs["file"] = path;
    rep.inputs["n"] = std::to_string(c.n());
    rep.inputs["dim"] = std::to_string(c.dim());

    int red = c.n() - c.dim();
    try {
        int r = covering_radius_exact(c);
        ReportEntry e;
        e.kind = "exact";
        e.r = r;
        e.params["syndromes"] = pow2_int((unsigned)red).str();
        rep.results.push_back(e);
    } catch (const std::domain_error&) {
        rep.notes.push_back("covering radius not verified (size): 2^" +
                            std::to_string(red) + " syndromes");
        emit(rep, fmt);
        return 3;
    }

    if (c.n() <= 24) {
        DeepHoleReport dh = deep_holes(c);
        rep.notes.push_back("deep holes: " + dh.total_count.str() +
                            " points at maximum distance");
        rep.notes.push_back(dh.all_antipodal
                                ? "every deep hole is the complement of a codeword"
                                : "some deep hole is not a codeword complement");
    } else {
        rep.notes.push_back("deep hole census skipped (n > 24)");
    }

    emit(rep, fmt);
    return 0;
}

// ---- table6 ---------------------------------------------------------------

struct Table6Row {
    const char* label;
    FamilyKind fam;
    int e, m, k, grid_j;
    bool universal; // false = conditional case-1 flavour
};

int run_table6(int max_n, OutFmt fmt) {
    static const Table6Row rows[] = {
        {"bch e=2 m=4", FamilyKind::BCH, 2, 4, 2, 2, false},
        {"bch e=2 m=5", FamilyKind::BCH, 2, 5, 2, 6, false},
        {"melas m=4", FamilyKind::Melas, 1, 4, 1, 6, false},
        {"melas m=5", FamilyKind::Melas, 1, 5, 2, 6, false},
        {"zetterberg m=2", FamilyKind::Zetterberg, 1, 2, 2, 1, true},
        {"zetterberg m=3", FamilyKind::Zetterberg, 1, 3, 2, 1, true},
    };

    Report rep;
    rep.command = "table6";
    rep.inputs["max_n"] = std::to_string(max_n);

    std::ostringstream table;
    table << "| family | n | M | tau | lower | fl | improved | flavour | ell | exact |\n";
    table << "|---|---|---|---|---|---|---|---|---|---|\n";

    for (const Table6Row& row : rows) {
        ConstructionParams p = row.fam == FamilyKind::BCH
                                   ? ConstructionParams::bch(row.e, row.m)
                               : row.fam == FamilyKind::Melas
                                   ? ConstructionParams::melas(row.m)
                                   : ConstructionParams::zetterberg(row.m);
        FamilyLowerBound lb = row.fam == FamilyKind::BCH ? lower_bound_bch(row.e, row.m)
                              : row.fam == FamilyKind::Melas
                                  ? lower_bound_melas(row.m)
                                  : lower_bound_zetterberg(row.m);
        Rational ell(2 * row.grid_j - p.n, p.n);

        BoundReport fl = fl_bound(p.n, p.expected_tau);
        BoundReport imp = row.universal
                              ? universal_bound(p.n, row.k, p.expected_M, ell, std::nullopt)
                              : improved_bound_case1(p.n, row.k, ell);

        auto push = [&](ReportEntry e) {
            e.params["family"] = row.label;
            e.params["n"] = std::to_string(p.n);
            rep.results.push_back(e);
        };

        ReportEntry lo;
        lo.kind = "lower";
        lo.params["R_at_least"] = std::to_string(lb.value);
        push(lo);
        push(entry_from(fl));
        ReportEntry ie = entry_from(imp);
        ie.params["ell"] = rat_string(ell);
        ie.params["k"] = std::to_string(row.k);
        push(ie);

        std::string exact_cell = "not verified (size)";
        int redundancy = (int)p.n - (int)boost::multiprecision::msb(p.expected_M);
        if (p.n <= max_n && redundancy <= 24) {
            BinaryLinearCode oa =
                row.fam == FamilyKind::BCH ? construct_bch_dual(row.e, row.m)
                : row.fam == FamilyKind::Melas ? construct_melas_dual(row.m)
                                               : construct_zetterberg_dual(row.m);
            int r = covering_radius_exact(oa);
            exact_cell = std::to_string(r);
            ReportEntry ex;
            ex.kind = "exact";
            ex.r = r;
            push(ex);
        } else {
            rep.notes.push_back(std::string(row.label) +
                                ": exact radius not verified (size)");
        }
        if (!row.universal)
            rep.notes.push_back(std::string(row.label) + ": improved bound is conditional");

        table << "| " << row.label << " | " << p.n << " | " << p.expected_M << " | "
              << p.expected_tau << " | " << lb.value << " | " << fl.r_bound << " | "
              << imp.r_bound << " | "
              << (row.universal ? "universal" : "case1 (conditional)") << " | t"
              << row.grid_j << " | " << exact_cell << " |\n";
    }

    if (fmt == OutFmt::Json) {
        emit(rep, fmt);
        return 0;
    }
    if (fmt == OutFmt::Csv) {
        std::string md = table.str();
        // reuse the table rows, one csv line each
        std::istringstream is(md);
        std::string line;
        std::getline(is, line);
        std::cout << "family,n,M,tau,lower,fl,improved,flavour,ell,exact\n";
        std::getline(is, line); // separator
        while (std::getline(is, line)) {
            std::string out;
            std::size_t start = 2, end = line.rfind(" |");
            std::string body = line.substr(start, end - start);
            std::size_t pos = 0, next;
            while ((next = body.find(" | ", pos)) != std::string::npos) {
                out += body.substr(pos, next - pos) + ",";
                pos = next + 3;
            }
            out += body.substr(pos);
            std::cout << out << "\n";
        }
        return 0;
    }
    std::cout << "# table6\n\n" << table.str();
    if (!rep.notes.empty()) {
        std::cout << "\n";
        for (const std::string& n : rep.notes) std::cout << "- " << n << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified covering-radius bounds for binary orthogonal arrays"};
    app.require_subcommand(1);

    BoundsArgs ba;
    bool b_json = false, b_csv = false;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate bounds for given parameters");
    bounds->add_option("-n,--length", ba.n, "array length")->required();
    bounds->add_option("-t,--tau", ba.tau, "strength");
    bounds->add_option("-k,--levels", ba.k, "adjacent level count (strength 2k)");
    bounds->add_option("-M,--cardinality", ba.m_str, "number of rows");
    bounds->add_option("--ell", ba.ell_str, "cut point: exact p/q or grid tJ");
    bounds->add_option("-d,--min-distance", ba.d, "known minimum distance");
    add_format_flags(bounds, b_json, b_csv);

    std::string family, c_out;
    int c_e = 1, c_m = 0;
    bool c_json = false, c_csv = false;
    CLI::App* construct = app.add_subcommand("construct", "build a family instance");
    construct->add_option("family", family, "bch | melas | zetterberg")->required();
    construct->add_option("-e,--exponent", c_e, "bch odd-power count");
    construct->add_option("-m,--degree", c_m, "field degree parameter")->required();
    construct->add_option("-o,--output", c_out, "output file (codes text format)");
    add_format_flags(construct, c_json, c_csv);

    std::string r_path;
    bool r_json = false, r_csv = false;
    CLI::App* radius = app.add_subcommand("radius", "exact covering radius of a code file");
    radius->add_option("file", r_path, "code file")->required();
    add_format_flags(radius, r_json, r_csv);

    int t_max_n = 31;
    bool t_json = false, t_csv = false;
    CLI::App* table6 = app.add_subcommand("table6", "family comparison table");
    table6->add_option("--max-n", t_max_n, "largest n for the exact-radius column");
    add_format_flags(table6, t_json, t_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bounds) return run_bounds(ba, pick_format(b_json, b_csv));
        if (*construct)
            return run_construct(family, c_e, c_m, c_out, pick_format(c_json, c_csv));
        if (*radius) return run_radius(r_path, pick_format(r_json, r_csv));
        if (*table6) return run_table6(t_max_n, pick_format(t_json, t_csv));
    } catch (const std::domain_error& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
