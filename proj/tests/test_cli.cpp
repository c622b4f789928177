#include "mpverify/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::vector<json> lines;
    std::string raw;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = mpverify::cli::run(args, out, err);
    RunResult r{code, {}, out.str(), err.str()};
    std::istringstream in(r.raw);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line.front() == '{') r.lines.push_back(json::parse(line));
    return r;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"theta", "--no-such-flag"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("natural number parsing with suffixes") {
    using mpverify::cli::parse_natural;
    CHECK(parse_natural("123") == 123);
    CHECK(parse_natural("100k") == 100'000);
    CHECK(parse_natural("25M") == 25'000'000);
    CHECK(parse_natural("3G") == 3'000'000'000ull);
    CHECK(parse_natural("1e8") == 100'000'000);
}

TEST_CASE("theta subcommand value") {
    const auto r = run_cli({"theta", "--x", "100", "--mod", "15", "--res", "1"});
    REQUIRE(r.code == 0);
    REQUIRE(r.lines.size() == 1);
    CHECK(r.lines[0]["check_id"] == "theta");
    CHECK(std::stod(r.lines[0]["lhs"].get<std::string>()) ==
          doctest::Approx(7.5448610687).epsilon(1e-9));
}

TEST_CASE("search subcommand lists the perfect numbers") {
    const auto r = run_cli({"search", "--limit", "100k", "--target", "2/1"});
    REQUIRE(r.code == 0);
    CHECK(r.lines[0]["lhs"] == "[6,28,496,8128]");
    CHECK(r.lines[0]["params"]["count"] == "4");
}

TEST_CASE("computation errors exit with 1 and an error report") {
    const auto r = run_cli({"delta", "--s", "2", "--primes", "9,15"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);
    bool has_error_line = false;
    for (const auto& l : r.lines) has_error_line |= l["check_id"] == "error";
    CHECK(has_error_line);
}

TEST_CASE("failed checks exit with 1") {
    // z <= 61 rejects the identity run
    CHECK(run_cli({"sums", "--z", "50", "--mod", "15", "--res", "1", "--identities"}).code == 1);
}

TEST_CASE("csv output has the documented header") {
    const auto r = run_cli({"--csv", "sigma", "--n", "672"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.raw);
    std::string header;
    std::getline(in, header);
    CHECK(header == "check_id,pass,lhs,rhs,margin,params,notes");
    std::string row;
    std::getline(in, row);
    CHECK(row.rfind("sigma,true,2016", 0) == 0);
}

TEST_CASE("derive-constants passes end to end") {
    const auto r = run_cli({"derive-constants"});
    CHECK(r.code == 0);
    CHECK(r.lines.size() >= 10);
    for (const auto& l : r.lines) CHECK(l["pass"] == true);
}

TEST_CASE("final-bound passes and reports the exponent") {
    const auto r = run_cli({"final-bound"});
    REQUIRE(r.code == 0);
    const auto& last = r.lines.back();
    CHECK(last["check_id"] == "final-bound");
    const double expo = std::stod(last["lhs"].get<std::string>());
    CHECK(expo == doctest::Approx(4.97401e10).epsilon(1e-4));
}

TEST_CASE("sums identities pass at a desk z") {
    const auto r = run_cli({"sums", "--z", "5000", "--mod", "15", "--res", "1", "--identities"});
    CHECK(r.code == 0);
    CHECK(r.lines.size() == 3);
}

TEST_CASE("sieve subcommand round-trips a problem file") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "mpverify_problem.json";
    {
        std::ofstream out(path);
        out << R"({"X": 100000, "z": 10, "w": 10, "D": 400,
                   "classes": {"2": [0], "3": [0], "5": [0], "7": [0]},
                   "rd_hypothesis": true})";
    }
    const auto r = run_cli({"sieve", "--problem", path.string()});
    REQUIRE(r.code == 0);
    REQUIRE(r.lines.size() == 3);
    CHECK(r.lines[0]["check_id"] == "sieve-exact");
    CHECK(r.lines[1]["check_id"] == "sieve-bound");
    CHECK(r.lines[2]["check_id"] == "sieve-soundness");
    CHECK(r.lines[2]["pass"] == true);
    fs::remove(path);
}

TEST_CASE("psi-chain matches the ledger in limit mode") {
    const auto r = run_cli({"psi-chain", "--g", "2", "--limit-mode"});
    REQUIRE(r.code == 0);
    const double psi5 = std::stod(r.lines[0]["params"]["psi5"].get<std::string>());
    CHECK(psi5 == doctest::Approx(40.9177).epsilon(5e-4));

    // finite mode with an R-multiple shorthand also runs the audit
    const auto fin = run_cli({"psi-chain", "--g", "2", "--logx", "14R"});
    REQUIRE(fin.code == 0);
    CHECK(fin.lines.size() == 3);  // chain + two audit checks
}

TEST_CASE("theta-bound with a forced regime") {
    // the small band holds far beyond 50, so forcing it still passes here
    const auto ok = run_cli({"theta-bound", "--x", "100k", "--regime", "small"});
    CHECK(ok.code == 0);
    CHECK(ok.lines[0]["params"]["regime"] == "small");

    // forcing the dusart band where it does not apply fails the check
    const auto bad = run_cli({"theta-bound", "--x", "100", "--regime", "dusart"});
    CHECK(bad.code == 1);
    CHECK(bad.lines[0]["pass"] == false);
}
