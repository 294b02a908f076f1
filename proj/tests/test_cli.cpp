/*
   Copyright 2026 The hallc1 authors

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hallc1/cli.hpp"

using namespace hallc1;

namespace {

std::string write_quiver(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << text;
    return path.string();
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::vector<const char*> argv = {"hallc1"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli((int)argv.size(), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string a2 = write_quiver("cli_a2.quiver", "type=A2\n1 -> 2\n");
const std::string a3 = write_quiver("cli_a3.quiver", "type=A3\n1 -> 2\n2 -> 3\n");

}  // namespace

TEST_CASE("roots lists positive roots with projective markers") {
    auto r = run({"roots", "--quiver", a2});
    CHECK(r.code == 0);
    CHECK(r.out.find("[1,1]  P1") != std::string::npos);
    CHECK(r.out.find("[0,1]  P2") != std::string::npos);
    CHECK(r.out.find("[1,0]") != std::string::npos);

    auto r3 = run({"roots", "--quiver", a3, "--format", "json"});
    auto j = nlohmann::json::parse(r3.out);
    CHECK(j.at("results").size() == 6);
}

TEST_CASE("indecs lists the canonical order with homologies") {
    auto r = run({"indecs", "--quiver", a2, "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("class,homology,underlying") != std::string::npos);
    CHECK(r.out.find("K1,\"[0,0]\",\"[2,2]\"") != std::string::npos);
}

TEST_CASE("hallnum accepts shorthand and JSON descriptors alike") {
    auto r1 = run({"hallnum", "C[0,1]", "C[0,1]", "2*C[0,1]", "--quiver", a2, "--primes", "2,3,5"});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("2  3") != std::string::npos);
    CHECK(r1.out.find("3  4") != std::string::npos);
    CHECK(r1.out.find("5  6") != std::string::npos);

    auto r2 = run({"hallnum", R"({"mods":{"[0,1]":1},"projs":{}})", "C[0,1]", "2*C[0,1]",
                   "--quiver", a2, "--primes", "2,3,5"});
    CHECK(r2.code == 0);
    CHECK(r2.out == r1.out);
}

TEST_CASE("hallpoly prints the interpolated polynomial") {
    auto r = run({"hallpoly", "C[0,1]", "C[0,1]", "2*C[0,1]", "--quiver", a2});
    CHECK(r.code == 0);
    CHECK(r.out.find("x+1") != std::string::npos);
}

TEST_CASE("mul kinds produce the expected products") {
    auto r = run({"mul", "plain", "C[0,1]", "C[0,1]", "--quiver", a2, "--primes", "2",
                  "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("results")[0].at("prime") == 2);
    bool saw3 = false;
    for (auto& t : j.at("results")[0].at("product").at("terms"))
        if (t.at("coeff") == "3") saw3 = true;
    CHECK(saw3);

    auto rt = run({"mul", "twisted", "C[1,1]", "C[0,1]", "--quiver", a2});
    CHECK(rt.out.find("(v)*C[0,1]+C[1,1]") != std::string::npos);

    auto rm = run({"mul", "module", "C[1,0]", "C[0,1]", "--quiver", a2, "--primes", "2"});
    CHECK(rm.out.find("C[1,1]") != std::string::npos);

    auto bad = run({"mul", "module", "K1", "C[0,1]", "--quiver", a2});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("must not contain K parts") != std::string::npos);
}

TEST_CASE("bracket and express") {
    auto rb = run({"bracket", "C[1,1]", "C[0,1]", "--quiver", a2});
    CHECK(rb.code == 0);
    CHECK(rb.out.find("(-1)*C[1,0]") != std::string::npos);

    auto bad = run({"bracket", "2*C[1,1]", "C[0,1]", "--quiver", a2});
    CHECK(bad.code == 1);

    auto re = run({"express", "C[1,0]", "--quiver", a2, "--primes", "2", "--format", "json"});
    CHECK(re.code == 0);
    auto j = nlohmann::json::parse(re.out);
    CHECK(j.at("results")[0].at("terms").size() == 2);
}

TEST_CASE("pbw-check reports a clean sweep") {
    auto r = run({"pbw-check", "4", "--quiver", a2, "--primes", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2  17  0") != std::string::npos);
}

TEST_CASE("verify selector filters the suite and gates the exit code") {
    auto r = run({"verify", "4.2", "--quiver", a2, "--primes", "2,3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("4.2,1-1,2,pass") != std::string::npos);
    CHECK(r.out.find("6.2-line1") == std::string::npos);

    auto rk = run({"verify", "7.3", "--quiver", a2, "--primes", "2"});
    CHECK(rk.code == 0);
    CHECK(rk.out.find("7.3-central") != std::string::npos);
}

TEST_CASE("output is deterministic and --out writes a file") {
    auto r1 = run({"verify", "6.1", "--quiver", a2, "--primes", "2", "--format", "json"});
    auto r2 = run({"verify", "6.1", "--quiver", a2, "--primes", "2", "--format", "json"});
    CHECK(r1.out == r2.out);

    auto path = std::filesystem::temp_directory_path() / "cli_out.json";
    auto r3 = run({"verify", "6.1", "--quiver", a2, "--primes", "2", "--format", "json", "--out",
                   path.string()});
    CHECK(r3.code == 0);
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == r1.out);
}

TEST_CASE("errors surface as nonzero exit codes with messages") {
    auto bad_class = run({"hallnum", "C[9,9]", "C[0,1]", "C[0,1]", "--quiver", a2});
    CHECK(bad_class.code == 1);
    CHECK(bad_class.err.find("not a positive root") != std::string::npos);

    auto no_quiver = run({"roots"});
    CHECK(no_quiver.code != 0);

    auto bad_sel = run({"verify", "9.9", "--quiver", a2});
    CHECK(bad_sel.code != 0);
}
