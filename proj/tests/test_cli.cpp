#include "partitions/exact.hpp"
#include "partitions/models.hpp"

#include <catch2/catch.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr interleaved
};

std::string cli_binary() {
    const char* p = std::getenv("PARTITIONS_CLI_BIN");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_binary() + " " + args + " 2>&1";
    FILE* pipe            = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code      = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

} // namespace

TEST_CASE("cli exact matches the library oracle") {
    const auto r = run_cli("exact --spec classical --nmax 100");
    REQUIRE(r.exit_code == 0);
    CHECK(first_line(r.output) == "n,exact");
    CHECK(r.output.find("\n100,190569292\n") != std::string::npos);
}

TEST_CASE("cli output is deterministic") {
    const std::string args = "compare --spec classical --nmax 64 --order 1";
    const auto a           = run_cli(args);
    const auto b           = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(first_line(a.output) ==
          "n,exact,log_exact,log_estimate_order0,log_estimate_order1,log_cauchy,ratio");
}

TEST_CASE("cli json mirrors the csv fields") {
    const auto r = run_cli("cauchy --spec classical --n 50 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["command"] == "cauchy");
    CHECK(j["spec"] == "classical");
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["n"] == "50");
    CHECK(j["rows"][0]["nearest_integer"] == "204226");
}

TEST_CASE("cli cauchy rounds to the exact count") {
    const auto r = run_cli("cauchy --spec 'powers(2)' --n 30");
    REQUIRE(r.exit_code == 0);
    const auto table = partitions::exact_counts(
        partitions::parts_up_to(partitions::PowerAP{1, 1, 2}, 30), 30);
    CHECK(r.output.find("30," ) != std::string::npos);
    CHECK(r.output.find("," + table[30].str() + ",") != std::string::npos);
}

TEST_CASE("cli estimate emits constants in json") {
    const auto r = run_cli("estimate --spec 'kpow1(3,2)' --n 1000 --format json");
    REQUIRE(r.exit_code == 0);
    const std::string body = r.output.substr(r.output.find('{'));
    const auto j           = nlohmann::json::parse(body);
    CHECK(j["constants"].contains("frak_b"));
    CHECK(j["constants"].contains("gamma01"));
    // condition (g) fails for this family; the note goes to stderr
    CHECK(r.output.find("condition (g)") != std::string::npos);
}

TEST_CASE("cli error taxonomy maps to exit codes") {
    CHECK(run_cli("compare --spec 'nonsense(2)' --nmax 100").exit_code == 2);
    CHECK(run_cli("compare --spec 'poly(1,0,0)' --nmax 100").exit_code == 2);
    CHECK(run_cli("cauchy --spec classical --n 10 --quad-points 8").exit_code == 2);
    CHECK(run_cli("fit --spec classical --nmax 100").exit_code == 2);
    CHECK(run_cli("estimate --spec classical --n 10 --digits 300").exit_code == 2);

    const auto adm = run_cli("compare --spec 'poly(1,1,2)' --nmax 100");
    CHECK(adm.exit_code == 2);
    CHECK(adm.output.find("condition (g)") != std::string::npos);
    CHECK(adm.output.find("2") != std::string::npos); // witness modulus
}

TEST_CASE("cli fit recovers the classical coefficient") {
    const auto r = run_cli("fit --spec classical --nmax 2000 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j       = nlohmann::json::parse(r.output);
    const double c1    = std::stod(j["rows"][0]["c1_hat"].get<std::string>());
    const double want  = -0.4432879768;
    CHECK(std::abs(c1 - want) / std::abs(want) < 0.05);
}

TEST_CASE("cli verify reports pass on classical") {
    const auto r = run_cli("verify --spec classical --n 200 --grid 1000");
    REQUIRE(r.exit_code == 0);
    CHECK(first_line(r.output) == "check,metric,value,status");
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("arc_bound") != std::string::npos);
    CHECK(r.output.find("phi_expansion_strong") != std::string::npos);
}
