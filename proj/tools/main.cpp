/*
   Copyright 2026 The Commutant Authors

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

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "commutant/commutant.hpp"
#include "commutant/oracle.hpp"
#include "commutant/orbits.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidMap = 2;
constexpr int kExitUnsupportedDegree = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitOracleTooLarge = 5;

// Flag-level problems: exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A well-formed but unusable --f value: exit 2.
struct MapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint32_t p = 0;
    std::string f;
    std::uint32_t degree = 0;
    std::uint32_t k = 0;
    std::string format = "text";
    std::string out;
};

commutant::FieldContext make_field(std::uint32_t p) {
    try {
        return commutant::FieldContext(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::uint32_t parse_u32(std::string_view text) {
    std::uint32_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw UsageError("expected a nonnegative integer, got '" + std::string(text) + "'");
    }
    return value;
}

commutant::LinearPolynomial parse_map(const commutant::FieldContext& field,
                                      const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("--f expects 'a,b' for a*x + b, got '" + text + "'");
    }
    std::uint32_t a = parse_u32(std::string_view(text).substr(0, comma));
    std::uint32_t b = parse_u32(std::string_view(text).substr(comma + 1));
    if (a == 0 || a >= field.modulus() || b >= field.modulus()) {
        throw MapError("--f needs 0 < a < p and 0 <= b < p, got a=" + std::to_string(a) +
                       " b=" + std::to_string(b) + " with p=" + std::to_string(field.modulus()));
    }
    return commutant::LinearPolynomial(field.element(a), field.element(b));
}

commutant::OracleBudget budget_from_env() {
    commutant::OracleBudget budget;
    if (const char* raw = std::getenv("COMMUTANT_ORACLE_BUDGET")) {
        std::uint64_t value = 0;
        std::string_view text(raw);
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (ec != std::errc() || ptr != end || value == 0) {
            throw UsageError("COMMUTANT_ORACLE_BUDGET must be a positive integer, got '" +
                             std::string(raw) + "'");
        }
        budget.max_candidates = value;
    }
    return budget;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    namespace fs = std::filesystem;
    fs::path target(out_path);
    fs::path tmp(out_path + ".tmp");
    {
        std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
        stream << payload;
        stream.flush();
        if (!stream) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);  // atomic publish: never expose a partial file
}

json map_to_json(const commutant::LinearPolynomial& f) {
    return json::array({f.slope().value(), f.shift().value()});
}

json members_to_json(const std::vector<commutant::DensePolynomial>& members,
                     std::uint32_t degree) {
    json rows = json::array();
    for (const auto& g : members) {
        json row = json::array();
        auto coeffs = g.coefficients();
        for (std::uint32_t i = 0; i <= degree; ++i) {
            row.push_back(i < coeffs.size() ? coeffs[i] : 0);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string members_to_csv(const std::vector<commutant::DensePolynomial>& members,
                           std::uint32_t degree) {
    std::string out;
    for (std::uint32_t i = 0; i <= degree; ++i) {
        if (i > 0) out += ',';
        out += 'c' + std::to_string(i);
    }
    out += '\n';
    for (const auto& g : members) {
        auto coeffs = g.coefficients();
        for (std::uint32_t i = 0; i <= degree; ++i) {
            if (i > 0) out += ',';
            out += std::to_string(i < coeffs.size() ? coeffs[i] : 0);
        }
        out += '\n';
    }
    return out;
}

std::string render_members(const std::vector<commutant::DensePolynomial>& members,
                           const Options& opt, const commutant::LinearPolynomial& f) {
    if (opt.format == "text") {
        std::string out;
        for (const auto& g : members) {
            out += commutant::to_text(g);
            out += '\n';
        }
        return out;
    }
    if (opt.format == "csv") return members_to_csv(members, opt.degree);
    json payload;
    payload["p"] = opt.p;
    payload["f"] = map_to_json(f);
    payload["d"] = opt.degree;
    payload["count"] = members.size();
    payload["members"] = members_to_json(members, opt.degree);
    return payload.dump(2) + "\n";
}

int run_count(const Options& opt) {
    auto field = make_field(opt.p);
    auto f = parse_map(field, opt.f);
    commutant::CommutantSpec spec(f, opt.degree);
    const std::uint64_t n = commutant::count(spec);
    const char* branch = n == 0 ? "zero" : (f.slope().value() == 1 ? "monic" : "nonmonic");
    if (opt.format == "text") {
        emit(std::to_string(n) + "\n", opt.out);
    } else {
        json payload;
        payload["p"] = opt.p;
        payload["f"] = map_to_json(f);
        payload["d"] = opt.degree;
        payload["count"] = n;
        payload["branch"] = branch;
        emit(payload.dump(2) + "\n", opt.out);
    }
    return kExitOk;
}

int run_enumerate(const Options& opt) {
    auto field = make_field(opt.p);
    auto f = parse_map(field, opt.f);
    commutant::CommutantSpec spec(f, opt.degree);
    auto members = commutant::enumerate(spec);
    emit(render_members(members, opt, f), opt.out);
    return kExitOk;
}

int run_oracle(const Options& opt) {
    auto field = make_field(opt.p);
    auto f = parse_map(field, opt.f);
    auto members = commutant::brute_force_commutant(f.to_polynomial(), opt.degree,
                                                    budget_from_env());
    emit(render_members(members, opt, f), opt.out);
    return kExitOk;
}

int run_verify(const Options& opt) {
    auto field = make_field(opt.p);
    auto f = parse_map(field, opt.f);
    commutant::CommutantSpec spec(f, opt.degree);
    const std::uint64_t formula = commutant::count(spec);
    auto constructed = commutant::enumerate(spec);
    auto oracle = commutant::brute_force_commutant(f.to_polynomial(), opt.degree,
                                                   budget_from_env());
    auto report = commutant::compare_sets(constructed, oracle);
    const bool pass =
        report.pass() && constructed.size() == formula && oracle.size() == formula;

    if (opt.format == "text") {
        std::string out;
        out += "formula:     " + std::to_string(formula) + "\n";
        out += "constructed: " + std::to_string(report.constructed_size) + "\n";
        out += "oracle:      " + std::to_string(report.oracle_size) + "\n";
        out += "missing:     " + std::to_string(report.missing.size()) + "\n";
        out += "extra:       " + std::to_string(report.extra.size()) + "\n";
        for (const auto& g : report.missing) out += "  missing " + commutant::to_text(g) + "\n";
        for (const auto& g : report.extra) out += "  extra " + commutant::to_text(g) + "\n";
        out += std::string("result:      ") + (pass ? "PASS" : "FAIL") + "\n";
        emit(out, opt.out);
    } else {
        json payload;
        payload["p"] = opt.p;
        payload["f"] = map_to_json(f);
        payload["d"] = opt.degree;
        payload["formula"] = formula;
        payload["constructed"] = report.constructed_size;
        payload["oracle"] = report.oracle_size;
        payload["missing"] = members_to_json(report.missing, opt.degree);
        payload["extra"] = members_to_json(report.extra, opt.degree);
        payload["pass"] = pass;
        emit(payload.dump(2) + "\n", opt.out);
    }
    return pass ? kExitOk : kExitMismatch;
}

std::string set_to_text(const std::vector<std::uint32_t>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out + "}";
}

int run_orbits(const Options& opt) {
    auto field = make_field(opt.p);
    std::vector<commutant::OrbitTriple> rows;
    rows.reserve(opt.k + 1);
    for (std::uint32_t k = 0; k <= opt.k; ++k) rows.push_back(commutant::build_orbits(field, k));

    if (opt.format == "text") {
        std::vector<std::vector<std::string>> cells;
        cells.push_back({"k", "T_k", "R_k", "S_k"});
        for (const auto& row : rows) {
            cells.push_back({std::to_string(row.k), set_to_text(row.T), set_to_text(row.R),
                             set_to_text(row.S)});
        }
        std::size_t width[4] = {0, 0, 0, 0};
        for (const auto& row : cells) {
            for (int c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
        }
        std::string out;
        for (const auto& row : cells) {
            for (int c = 0; c < 4; ++c) {
                std::string cell = row[c];
                if (c < 3) cell.resize(width[c] + 2, ' ');
                out += cell;
            }
            out += '\n';
        }
        emit(out, opt.out);
    } else {
        json payload;
        payload["p"] = opt.p;
        json table = json::array();
        for (const auto& row : rows) {
            json entry;
            entry["k"] = row.k;
            entry["T"] = row.T;
            entry["R"] = row.R;
            entry["S"] = row.S;
            table.push_back(std::move(entry));
        }
        payload["rows"] = std::move(table);
        emit(payload.dump(2) + "\n", opt.out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Commutants of linear polynomials over F_p under composition"};
    app.require_subcommand(1);

    Options count_opt, enum_opt, orbits_opt, oracle_opt, verify_opt;

    auto add_common = [](CLI::App* cmd, Options& opt, bool wants_degree,
                         const std::set<std::string>& formats) {
        cmd->add_option("--p", opt.p, "odd prime modulus")->required();
        if (wants_degree) {
            cmd->add_option("--f", opt.f, "linear polynomial as 'a,b' meaning a*x + b")
                ->required();
            cmd->add_option("--degree", opt.degree, "degree d of the commutant members")
                ->required();
        }
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(formats));
        cmd->add_option("--out", opt.out, "write output atomically to this file");
    };

    CLI::App* count_cmd =
        app.add_subcommand("count", "Cardinality of the degree-d commutant of f");
    add_common(count_cmd, count_opt, true, {"text", "json"});

    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "List every degree-d polynomial commuting with f");
    add_common(enum_cmd, enum_opt, true, {"text", "json", "csv"});

    CLI::App* orbits_cmd =
        app.add_subcommand("orbits", "Exponent orbit table T_k, R_k, S_k for x + 1");
    add_common(orbits_cmd, orbits_opt, false, {"text", "json"});
    orbits_cmd->add_option("--k", orbits_opt.k, "render rows 0..k")->required();

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "Brute-force the commutant, no structure assumed");
    add_common(oracle_cmd, oracle_opt, true, {"text", "json", "csv"});

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Check formula, enumeration, and brute force against each other");
    add_common(verify_cmd, verify_opt, true, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count_cmd->parsed()) return run_count(count_opt);
        if (enum_cmd->parsed()) return run_enumerate(enum_opt);
        if (orbits_cmd->parsed()) return run_orbits(orbits_opt);
        if (oracle_cmd->parsed()) return run_oracle(oracle_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidMap;
    } catch (const commutant::UnsupportedDegreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedDegree;
    } catch (const commutant::OracleTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOracleTooLarge;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidMap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
