#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dfmax::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, CountJson) {
    Result r = run({"count", "--d", "4", "--nmax", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"d\":4,\"counts\":[\"1\",\"8\",\"24\"]}\n");
}

TEST(Cli, CoeffsCsv) {
    Result r = run({"coeffs", "--kind", "b", "--terms", "3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "k,value\n0,1\n1,-1/2\n2,-1/6\n3,1/24\n");
}

TEST(Cli, KrawtchoukScalar) {
    Result r = run({"krawtchouk", "--n", "5", "--k", "1", "--x", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1/5\n");
}

TEST(Cli, UnknownCommandIsUsageError) {
    Result r = run({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("usage:"), std::string::npos);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, MissingFlagIsUsageError) {
    EXPECT_EQ(run({"count"}).code, 2);
    EXPECT_EQ(run({"count", "--d", "2", "--bogus", "1"}).code, 2);
    EXPECT_EQ(run({"count", "--d", "2", "--nmax", "3", "--format", "xml"}).code, 2);
}

TEST(Cli, GuardViolationNamesTheGuard) {
    Result r = run({"simulate", "--family", "dbar", "--d", "2", "--M", "64", "--seed", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("M <= 32"), std::string::npos);
    Result alias = run({"simulate", "--family", "spheres", "--nmax", "9", "--d", "2", "--M", "6", "--seed", "1"});
    EXPECT_EQ(alias.code, 1);
    EXPECT_NE(alias.err.find("M > 2 max|x_i|"), std::string::npos);
}

TEST(Cli, InvalidInputExitsOne) {
    Result r = run({"krawtchouk", "--n", "5", "--k", "7", "--x", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(run({"estimate", "--alpha", "1.5"}).code, 1);
}

TEST(Cli, SeededOutputIsDeterministicAndRecorded) {
    std::vector<std::string> args{"bounds", "--suite", "semigroup-approx", "--samples", "50", "--seed", "77",
                                  "--format", "json"};
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["seed"], 77);
    EXPECT_TRUE(j["worst_ratio"].is_null());
}

TEST(Cli, UnseededRunRecordsItsSeed) {
    Result r = run({"rm-check", "--s", "3", "--trials", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.contains("seed"));
    std::string seed = std::to_string(j["seed"].get<std::uint64_t>());
    Result again = run({"rm-check", "--s", "3", "--trials", "2", "--format", "json", "--seed", seed});
    EXPECT_EQ(again.out, r.out);
}

TEST(Cli, CsvUsesHeaderAndLineFeeds) {
    Result r = run({"estimate", "--d", "400", "--nmax", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("d,n,ln_exact,ln_estimate,log_ratio\n", 0), 0u);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(Cli, SimulationCarriesCaveat) {
    Result r = run({"simulate", "--family", "semigroup", "--d", "2", "--M", "8", "--trials", "2", "--seed", "3",
                    "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NE(j["caveat"].get<std::string>().find("lower bound"), std::string::npos);
    EXPECT_EQ(j["runs"][0]["seed"], 3);
}

TEST(Cli, ClippedShellsAreReported) {
    Result r = run({"simulate", "--family", "spheres", "--nmax", "3", "--d", "1", "--M", "8", "--seed", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("n=2 skipped"), std::string::npos);
}

TEST(Cli, WritesToOutPath) {
    std::string path = ::testing::TempDir() + "dfmax_cli_out.csv";
    Result r = run({"concentration", "--d", "6", "--n", "9", "--K", "2", "--a", "4", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header.rfind("d,n,K,a,shell_total", 0), 0u);
    std::remove(path.c_str());
}

TEST(Cli, BetaAgainstBruteForce) {
    Result r = run({"beta", "--nbar", "1", "--xi", "0.5,0.5", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["values"][0]["beta"].get<double>(), -1.0, 1e-15);
    EXPECT_NEAR(j["values"][0]["bruteforce"].get<double>(), -1.0, 1e-15);
}
