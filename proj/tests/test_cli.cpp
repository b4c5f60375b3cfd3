#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcm/moments.hpp"
#include "bcm/rational.hpp"
#include "bcm/sequences.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(BCM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("moments subcommand emits exact JSON rows") {
    CliResult r = run_cli("moments --q 9 --n 2 --method bezp");
    REQUIRE(r.exit_code == 0);
    json rows = json::parse(r.output);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["n"] == 0);
    CHECK(rows[0]["m2n"] == "1/1");
    CHECK(rows[1]["m2n"] == "1/8");
    CHECK(rows[2]["m2n"] == "7/320");
}

TEST_CASE("moments methods agree through the CLI") {
    json a = json::parse(run_cli("moments --q 5 --n 8 --method bezp").output);
    for (const char* method : {"l4", "euler"}) {
        json b = json::parse(run_cli(std::string("moments --q 5 --n 8 --method ") + method).output);
        CHECK(a == b);
    }
    json g = json::parse(run_cli("moments --q 5 --n 8 --method general --k 3").output);
    CHECK(a == g);
    json s = json::parse(run_cli("moments --q 2 --n 6 --method silver").output);
    json basic2 = json::parse(run_cli("moments --q 2 --n 6").output);
    CHECK(s == basic2);
}

TEST_CASE("usage errors exit with code 2") {
    CliResult bad_q = run_cli("moments --q 1 --n 5");
    CHECK(bad_q.exit_code == 2);
    CHECK(bad_q.output.find("q must exceed 1") != std::string::npos);

    CHECK(run_cli("moments --q 0/3 --n 5").exit_code == 2);
    CHECK(run_cli("moments --q abc --n 5").exit_code == 2);
    CHECK(run_cli("moments --q 9 --n 5 --method silver").exit_code == 2);
    CHECK(run_cli("moments --q 9 --n 5 --bogus-flag").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("weights --q 0 --k 2 --n 4").exit_code == 2);
    CHECK(run_cli("sequences --name fibonacci --n 5").exit_code == 2);
    CHECK(run_cli("density").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("CSV output round-trips through the rational grammar") {
    CliResult r = run_cli("moments --q 7/2 --n 6 --format csv");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "n,m2n");
    bcm::MomentTable expect = bcm::moments_basic(bcm::Rational::from_string("7/2"), 6);
    long n = 0;
    while (std::getline(lines, line)) {
        auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stol(line.substr(0, comma)) == n);
        CHECK(bcm::Rational::from_string(line.substr(comma + 1)) == expect.m[static_cast<std::size_t>(n)]);
        ++n;
    }
    CHECK(n == 7);
}

TEST_CASE("weights and sequences tables") {
    json w = json::parse(run_cli("weights --q 9 --k 2 --n 3").output);
    REQUIRE(w.size() == 4);
    CHECK(w[1]["value"] == "10/1");
    CHECK(w[3]["value"] == "2080/1");

    CliResult seq = run_cli("sequences --name pell --n 6 --format csv");
    CHECK(seq.output.find("6,70") != std::string::npos);
    json tau = json::parse(run_cli("sequences --name tau --n 4 --format json").output);
    CHECK(tau[2]["value"] == "3/1");
    CHECK(tau[3]["value"] == "0/1");
    json eul = json::parse(run_cli("sequences --name euler --n 3").output);
    CHECK(eul[3]["value"] == "-61");
}

TEST_CASE("verify subcommand reports and exit codes") {
    CliResult r = run_cli("verify --suite pell --n-max 200");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    int reports = 0;
    while (std::getline(lines, line)) {
        json rep = json::parse(line);
        CHECK(rep["passed"] == true);
        CHECK(rep["failures"].empty());
        CHECK(rep["n_max"] == 200);
        ++reports;
    }
    CHECK(reports == 5);

    CHECK(run_cli("verify --suite euler --n-max 10").exit_code == 0);
    CHECK(run_cli("verify --suite remarks --n-max 8").exit_code == 0);
    CHECK(run_cli("verify --suite selfsim --n-max 6 --q 9 --k 4").exit_code == 0);
}

TEST_CASE("charfn, density and sample emit machine-readable objects") {
    json cf = json::parse(run_cli("charfn --lambda 2 --t 1").output);
    CHECK(cf["value"].get<double>() == doctest::Approx(std::sin(1.0)).epsilon(1e-10));
    CHECK(cf["tail_bound"].get<double>() <= 1e-12);
    CHECK(cf["depth"].get<long>() >= 1);

    json dm = json::parse(run_cli("density --moment 2").output);
    CHECK(dm["m2n"] == "7/3");
    json dx = json::parse(run_cli("density --x 0").output);
    CHECK(dx["density"].get<double>() == doctest::Approx(std::sqrt(2.0) / 4.0));

    json s1 = json::parse(run_cli("sample --lambda 2 --count 500 --seed 11 --raw").output);
    json s2 = json::parse(run_cli("sample --lambda 2 --count 500 --seed 11 --raw").output);
    CHECK(s1 == s2);  // bit-deterministic given the seed
    CHECK(s1["rng"] == "mt19937_64");
    CHECK(s1["samples"].size() == 500);
}

TEST_CASE("canonical CI gate finishes well inside its budget") {
    auto start = std::chrono::steady_clock::now();
    CliResult r = run_cli("verify --suite all --n-max 20");
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.exit_code == 0);
    CHECK(elapsed < 60.0);
    std::istringstream lines(r.output);
    std::string line;
    int reports = 0;
    while (std::getline(lines, line)) {
        CHECK(json::parse(line)["passed"] == true);
        ++reports;
    }
    CHECK(reports == 17);  // 6 selfsim + 4 remark + 2 euler + 5 pell
}

TEST_CASE("output lands in a file with --out") {
    std::string path = "cli_out_test.json";
    CliResult r = run_cli("moments --q 4 --n 2 --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.empty());
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::string content(buf, std::fread(buf, 1, sizeof(buf), f));
    std::fclose(f);
    std::remove(path.c_str());
    json rows = json::parse(content);
    CHECK(rows[1]["m2n"] == "1/3");
}
