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

// Structured result reports with deterministic JSON, Markdown, and CSV
// renderings. Exactness is encoded in the value shape: a rational is a
// num/den pair, an algebraic number is a low/high enclosure (refined below
// 10^-30 before export), and counts are plain integers.

#ifndef OACR_REPORT_HPP
#define OACR_REPORT_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <oacr/bounds.hpp>
#include <oacr/rational.hpp>

namespace oacr {

struct ReportEntry {
    std::string kind;
    std::string assumption = "unconditional";
    std::optional<AlgebraicValue> rho;
    std::optional<Int> r;
    std::map<std::string, std::string> params;
};

inline ReportEntry entry_from(const BoundReport& b) {
    ReportEntry e;
    e.kind = bound_kind_name(b.kind);
    e.assumption = b.assumption.str();
    e.rho = b.rho_bound;
    e.r = b.r_bound;
    e.params = b.parameters;
    return e;
}

struct Report {
    std::string version = "1.0.0";
    std::string command;
    std::map<std::string, std::string> inputs;
    std::vector<ReportEntry> results;
    std::vector<std::string> notes;
};

namespace reportdetail {

inline const Rational& export_eps() {
    static const Rational eps(Int(1), Int(boost::multiprecision::pow(Int(10), 30)));
    return eps;
}

inline nlohmann::json rho_json(AlgebraicValue v) {
    nlohmann::json j;
    if (v.is_rational()) {
        const Rational& q = v.rational_value();
        j["num"] = numerator(q).str();
        j["den"] = denominator(q).str();
    } else {
        v.refine_to(export_eps());
        j["low"] = rat_string(v.root().lo);
        j["high"] = rat_string(v.root().hi);
    }
    return j;
}

inline std::string rho_cell(AlgebraicValue v) {
    if (v.is_rational()) return rat_string(v.rational_value());
    return "~" + v.decimal(12) + " (enclosure)";
}

} // namespace reportdetail

inline nlohmann::json to_json(const Report& rep) {
    nlohmann::json j;
    j["version"] = rep.version;
    j["command"] = rep.command;
    j["inputs"] = nlohmann::json::object();
    for (const auto& [k, v] : rep.inputs) j["inputs"][k] = v;
    j["results"] = nlohmann::json::array();
    for (const ReportEntry& e : rep.results) {
        nlohmann::json r;
        r["kind"] = e.kind;
        r["assumption"] = e.assumption;
        if (e.rho) r["rho"] = reportdetail::rho_json(*e.rho);
        if (e.r) r["R"] = e.r->convert_to<long long>();
        r["params"] = nlohmann::json::object();
        for (const auto& [k, v] : e.params) r["params"][k] = v;
        j["results"].push_back(r);
    }
    j["notes"] = rep.notes;
    return j;
}

inline std::string to_json_string(const Report& rep) { return to_json(rep).dump(2) + "\n"; }

inline std::string to_markdown(const Report& rep) {
    std::ostringstream os;
    os << "# " << rep.command << "\n\n";
    if (!rep.inputs.empty()) {
        os << "inputs:";
        for (const auto& [k, v] : rep.inputs) os << " " << k << "=" << v;
        os << "\n\n";
    }
    os << "| kind | assumption | rho >= | R <= | details |\n";
    os << "|---|---|---|---|---|\n";
    for (const ReportEntry& e : rep.results) {
        os << "| " << e.kind << " | " << e.assumption << " | "
           << (e.rho ? reportdetail::rho_cell(*e.rho) : "") << " | "
           << (e.r ? e.r->str() : "") << " |";
        for (const auto& [k, v] : e.params) os << " " << k << "=" << v << ";";
        os << " |\n";
    }
    if (!rep.notes.empty()) {
        os << "\n";
        for (const std::string& n : rep.notes) os << "- " << n << "\n";
    }
    return os.str();
}

inline std::string to_csv(const Report& rep) {
    std::ostringstream os;
    os << "kind,assumption,rho,R\n";
    for (const ReportEntry& e : rep.results) {
        std::string rho;
        if (e.rho) {
            AlgebraicValue v = *e.rho;
            if (v.is_rational())
                rho = rat_string(v.rational_value());
            else {
                v.refine_to(reportdetail::export_eps());
                rho = rat_string(v.root().lo) + ".." + rat_string(v.root().hi);
            }
        }
        std::string assumption = e.assumption;
        for (char& c : assumption)
            if (c == ',') c = ';';
        os << e.kind << "," << assumption << "," << rho << "," << (e.r ? e.r->str() : "")
           << "\n";
    }
    return os.str();
}

} // namespace oacr

#endif
