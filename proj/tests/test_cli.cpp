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

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commutant/poly.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / "commutant_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream stream(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

// Runs the installed binary through the shell, capturing exit code and both
// streams. env_prefix is prepended verbatim ("NAME=value").
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    auto dir = scratch_dir();
    auto out_path = dir / ("stdout_" + std::to_string(++counter) + ".txt");
    auto err_path = dir / ("stderr_" + std::to_string(counter) + ".txt");

    std::string command = env_prefix + " '" + COMMUTANT_CLI_PATH + "' " + args + " > '" +
                          out_path.string() + "' 2> '" + err_path.string() + "'";
    int raw = std::system(command.c_str());
    REQUIRE(raw != -1);
    REQUIRE(WIFEXITED(raw));

    RunResult result;
    result.exit_code = WEXITSTATUS(raw);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count: text and json") {
    auto text = run_cli("count --p 3 --f 1,1 --degree 6");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "18\n");

    auto monic = run_cli("count --p 3 --f 1,1 --degree 6 --format json");
    REQUIRE(monic.exit_code == 0);
    auto j = json::parse(monic.out);
    CHECK(j["p"] == 3);
    CHECK(j["f"] == json::array({1, 1}));
    CHECK(j["d"] == 6);
    CHECK(j["count"] == 18);
    CHECK(j["branch"] == "monic");

    auto diag = run_cli("count --p 5 --f 2,1 --degree 5 --format json");
    REQUIRE(diag.exit_code == 0);
    auto dj = json::parse(diag.out);
    CHECK(dj["count"] == 20);
    CHECK(dj["branch"] == "nonmonic");

    auto zero = run_cli("count --p 5 --f 2,0 --degree 2 --format json");
    REQUIRE(zero.exit_code == 0);
    auto zj = json::parse(zero.out);
    CHECK(zj["count"] == 0);
    CHECK(zj["branch"] == "zero");
}

TEST_CASE("exit codes map failure classes") {
    CHECK(run_cli("count --p 4 --f 1,1 --degree 3").exit_code == 1);   // composite p
    CHECK(run_cli("count --p 3 --f junk --degree 3").exit_code == 1);  // malformed --f
    CHECK(run_cli("count --p 3").exit_code == 1);                      // missing flags
    CHECK(run_cli("frobnicate --p 3").exit_code == 1);                 // unknown verb
    CHECK(run_cli("count --p 3 --f 1,1 --degree 6 --format csv").exit_code == 1);

    CHECK(run_cli("count --p 3 --f 0,1 --degree 3").exit_code == 2);   // zero slope
    CHECK(run_cli("count --p 3 --f 5,1 --degree 3").exit_code == 2);   // slope out of range
    CHECK(run_cli("count --p 3 --f 1,0 --degree 3").exit_code == 2);   // identity map

    CHECK(run_cli("count --p 3 --f 1,1 --degree 12").exit_code == 3);
    CHECK(run_cli("enumerate --p 3 --f 1,2 --degree 12").exit_code == 3);
    CHECK(run_cli("orbits --p 3 --k 4").exit_code == 3);

    auto err = run_cli("count --p 4 --f 1,1 --degree 3");
    CHECK(err.err.find("error:") != std::string::npos);
}

TEST_CASE("enumerate: frozen text output") {
    auto six = run_cli("enumerate --p 3 --f 1,1 --degree 3");
    CHECK(six.exit_code == 0);
    CHECK(six.out ==
          "x^3\n"
          "x^3 + 1\n"
          "x^3 + 2\n"
          "2x^3 + 2x\n"
          "2x^3 + 2x + 1\n"
          "2x^3 + 2x + 2\n");

    auto eighteen = run_cli("enumerate --p 3 --f 1,1 --degree 6");
    CHECK(eighteen.exit_code == 0);
    auto rows = lines_of(eighteen.out);
    CHECK(rows.size() == 18);
    CHECK(std::find(rows.begin(), rows.end(), "2x^6 + 2x^4 + x^3 + 2x^2 + 1") != rows.end());

    auto empty = run_cli("enumerate --p 5 --f 4,0 --degree 2");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("enumerate: json round-trips into commuting polynomials") {
    auto r = run_cli("enumerate --p 5 --f 2,1 --degree 5 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["p"] == 5);
    CHECK(j["f"] == json::array({2, 1}));
    CHECK(j["d"] == 5);
    REQUIRE(j["count"] == 20);
    REQUIRE(j["members"].size() == 20);

    commutant::FieldContext f5(5);
    auto f = commutant::DensePolynomial::from_coefficients(f5, {1, 2});
    for (const auto& row : j["members"]) {
        REQUIRE(row.size() == 6);  // c0 .. c5
        std::vector<std::uint32_t> coeffs;
        for (const auto& c : row) coeffs.push_back(c.get<std::uint32_t>());
        auto g = commutant::DensePolynomial::from_reduced(f5, coeffs);
        CHECK(commutant::commutes(f, g));
    }
}

TEST_CASE("enumerate: csv layout") {
    auto r = run_cli("enumerate --p 3 --f 1,1 --degree 3 --format csv");
    REQUIRE(r.exit_code == 0);
    auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "c0,c1,c2,c3");
    CHECK(rows[1] == "0,0,0,1");  // x^3
    CHECK(rows[4] == "0,2,0,2");  // 2x^3 + 2x
}

TEST_CASE("byte-identical output across runs") {
    const std::string args = "enumerate --p 5 --f 2,1 --degree 5 --format json";
    CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("orbits: table rows and json") {
    auto table = run_cli("orbits --p 5 --k 2");
    REQUIRE(table.exit_code == 0);
    auto rows = lines_of(table.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].find("k") == 0);
    CHECK(rows[0].find("T_k") != std::string::npos);
    CHECK(rows[0].find("S_k") != std::string::npos);
    CHECK(rows[2].find("{1,5}") != std::string::npos);
    CHECK(rows[2].find("{2,3,4}") != std::string::npos);
    CHECK(rows[3].find("{3,4,7,8,9}") != std::string::npos);

    auto r = run_cli("orbits --p 5 --k 5 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["p"] == 5);
    REQUIRE(j["rows"].size() == 6);
    CHECK(j["rows"][4]["T"] == json::array({4, 8, 12, 16, 20}));
    CHECK(j["rows"][5]["T"] == json::array({25}));
    CHECK(j["rows"][5]["S"] == json::array({9, 13, 14, 17, 18, 19, 21, 22, 23, 24}));
}

TEST_CASE("oracle verb: raw scan, identity allowed") {
    auto r = run_cli("oracle --p 5 --f 2,0 --degree 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x\n2x\n3x\n4x\n");

    // The identity is rejected by count/enumerate/verify but is a perfectly
    // scannable map: everything commutes with it.
    auto id = run_cli("oracle --p 3 --f 1,0 --degree 1");
    CHECK(id.exit_code == 0);
    CHECK(lines_of(id.out).size() == 6);
    CHECK(run_cli("count --p 3 --f 1,0 --degree 1").exit_code == 2);
}

TEST_CASE("verify: agreement and mismatch reporting") {
    auto ok = run_cli("verify --p 3 --f 2,1 --degree 3");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("result:      PASS") != std::string::npos);

    auto j = json::parse(run_cli("verify --p 5 --f 2,1 --degree 5 --format json").out);
    CHECK(j["pass"] == true);
    CHECK(j["formula"] == 20);
    CHECK(j["constructed"] == 20);
    CHECK(j["oracle"] == 20);
    CHECK(j["missing"].empty());
    CHECK(j["extra"].empty());

    // Degenerate degrees: the p translations at degree 1 and the lone fixed
    // point at degree 0 must survive the three-way check too.
    auto translations = json::parse(run_cli("verify --p 3 --f 1,1 --degree 1 --format json").out);
    CHECK(translations["pass"] == true);
    CHECK(translations["formula"] == 3);
    auto fixed_point = json::parse(run_cli("verify --p 5 --f 2,1 --degree 0 --format json").out);
    CHECK(fixed_point["pass"] == true);
    CHECK(fixed_point["formula"] == 1);

    // Degree 25 over F_5 is fine constructively but beyond the default
    // brute-force budget.
    CHECK(run_cli("verify --p 5 --f 1,1 --degree 25").exit_code == 5);
}

TEST_CASE("--out publishes atomically") {
    auto dir = scratch_dir();
    auto target = dir / "count_out.json";
    fs::remove(target);

    auto r = run_cli("count --p 3 --f 1,1 --degree 6 --format json --out '" +
                     target.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    REQUIRE(fs::exists(target));
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));
    auto j = json::parse(slurp(target));
    CHECK(j["count"] == 18);
}

TEST_CASE("oracle budget comes from the environment") {
    CHECK(run_cli("oracle --p 3 --f 1,1 --degree 5",
                  "COMMUTANT_ORACLE_BUDGET=100").exit_code == 5);
    auto at_budget = run_cli("oracle --p 3 --f 1,1 --degree 5",
                             "COMMUTANT_ORACLE_BUDGET=486");
    CHECK(at_budget.exit_code == 0);
    CHECK(at_budget.out.empty());
    CHECK(run_cli("oracle --p 3 --f 1,1 --degree 3",
                  "COMMUTANT_ORACLE_BUDGET=nonsense").exit_code == 1);
}

}  // TEST_SUITE
