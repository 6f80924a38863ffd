#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

#include "sockmatch/numeric.hpp"

using sockmatch::catalan;
using sockmatch::Count;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string("\"") + SOCKMATCH_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_roundtrip(const std::string& out) {
    const auto doc = nlohmann::ordered_json::parse(out);
    CHECK(doc.dump(2) + "\n" == out);
}

} // namespace

TEST_CASE("table csv output matches the golden file for every method", "[cli]") {
    const std::string golden = read_file(GOLDEN_TABLE_CSV);
    for (const std::string method : {"explicit", "alt", "rec1", "rec2", "complement"}) {
        const RunResult res = run_cli("table --format csv --method " + method);
        REQUIRE(res.exit_code == 0);
        REQUIRE(res.out == golden);
    }
}

TEST_CASE("tiny table and argument validation", "[cli]") {
    const RunResult one = run_cli("table --nmax 1 --kmax 1 --format csv");
    CHECK(one.exit_code == 0);
    CHECK(one.out == "n,k,B\n1,1,1\n");

    CHECK(run_cli("table --nmax 0").exit_code == 2);
    CHECK(run_cli("table --method nosuch").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);

    const RunResult md = run_cli("table --nmax 3 --kmax 3");
    CHECK(md.exit_code == 0);
    CHECK(md.out.find("| n\\k |") != std::string::npos);
    CHECK(md.out.find("| 3 | 5 | 4 | 1 |") != std::string::npos);
}

TEST_CASE("count subcommand across families", "[cli]") {
    const RunResult b = run_cli("count --family B --n 7 --k 4 --format csv");
    CHECK(b.exit_code == 0);
    CHECK(b.out == "family,n,k,method,value\nB,7,4,explicit,196\n");

    const RunResult w = run_cli("count --family W --n 1 --lower 1 --upper 0 --format csv");
    CHECK(w.exit_code == 0);
    CHECK(w.out == "family,n,lower,upper,method,value\nW,1,1,0,reflection,1\n");

    const RunResult a = run_cli("count --family A --n 5 --t 5 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out == "family,n,t,method,value\nA,5,5,bounded,42\n");

    const RunResult a2 = run_cli("count --family A --n 8 --t 3 --format csv");
    CHECK(a2.exit_code == 0);
    CHECK(a2.out == "family,n,t,method,value\nA,8,3,binomial_form,610\n");

    CHECK(run_cli("count --family Z --n 1").exit_code == 2);
    CHECK(run_cli("count --family B --n 7 --k 0").exit_code == 2);
}

TEST_CASE("prob subcommand", "[cli]") {
    const RunResult u = run_cli("prob --n 15 --k 2 --model uniform --format csv");
    CHECK(u.exit_code == 0);
    CHECK(u.out.find("9694844/9694845") != std::string::npos);

    const RunResult p = run_cli("prob --n 2 --k 2 --model physical --format csv");
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("2/3") != std::string::npos);

    const RunResult z = run_cli("prob --n 3 --k 5 --format csv");
    CHECK(z.exit_code == 0);
    CHECK(z.out.find("0/1") != std::string::npos);

    CHECK(run_cli("prob --n 0 --k 1").exit_code == 2);
}

TEST_CASE("simulate subcommand is deterministic and honest", "[cli]") {
    const std::string args =
        "simulate --model uniform --n 2 --k 2 --trials 100000 --seed 7 --format json";
    const RunResult first = run_cli(args);
    REQUIRE(first.exit_code == 0);
    const RunResult second = run_cli(args);
    CHECK(first.out == second.out);

    const auto doc = nlohmann::ordered_json::parse(first.out);
    CHECK(doc.at("trials").get<std::uint64_t>() == 100000);
    CHECK(doc.at("seed").get<std::uint64_t>() == 7);
    CHECK(doc.at("ci_low").get<double>() <= 0.5);
    CHECK(doc.at("ci_high").get<double>() >= 0.5);

    CHECK(run_cli("simulate --n 2 --k 2 --trials 0").exit_code == 2);
}

TEST_CASE("asym subcommand", "[cli]") {
    const RunResult k1 = run_cli("asym --k 1 --nmax 5 --format csv");
    REQUIRE(k1.exit_code == 0);
    std::istringstream lines(k1.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,exact,decimal,estimate");
    unsigned rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find(",1/1,") != std::string::npos);
    }
    CHECK(rows == 5);

    const RunResult k2 = run_cli("asym --k 2 --nmax 15 --format json");
    REQUIRE(k2.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(k2.out);
    CHECK(doc.at("rows").back().at("exact").get<std::string>() == "9694844/9694845");

    CHECK(run_cli("asym --k 5 --nmax 3").exit_code == 2);
}

TEST_CASE("json outputs round-trip byte for byte", "[cli]") {
    for (const std::string args :
         {std::string("table --nmax 4 --kmax 4 --format json"),
          std::string("count --family B --n 7 --k 4 --format json"),
          std::string("prob --n 15 --k 2 --format json"),
          std::string("simulate --n 3 --k 2 --trials 500 --seed 11 --format json"),
          std::string("asym --k 2 --nmax 10 --format json")}) {
        const RunResult res = run_cli(args);
        REQUIRE(res.exit_code == 0);
        check_roundtrip(res.out);
    }
}

TEST_CASE("counts in json are decimal strings", "[cli]") {
    const RunResult res = run_cli("count --family B --n 40 --k 2 --format json");
    REQUIRE(res.exit_code == 0);
    const auto doc = nlohmann::ordered_json::parse(res.out);
    REQUIRE(doc.at("value").is_string());
    const std::string v = doc.at("value").get<std::string>();
    CHECK(v == (catalan(40) - Count(1u)).str());
}
