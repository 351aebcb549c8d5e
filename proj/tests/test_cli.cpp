#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rchain/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = rchain::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, StatsOfEmptyPartition)
{
    const auto r = run({"stats", "[]", "--r", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("mex=1 "), std::string::npos);
    EXPECT_NE(r.out.find("maex=0 "), std::string::npos);
    EXPECT_NE(r.out.find("omega=0 "), std::string::npos);
    EXPECT_NE(r.out.find("Omega=1 "), std::string::npos);
    EXPECT_NE(r.out.find("class=P0"), std::string::npos);
}

TEST(Cli, StatsJsonForRange)
{
    const auto r = run({"stats", "[7,4,4,3]", "--r", "1..3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["schema"], 1);
    ASSERT_EQ(doc["stats"].size(), 3u);
    EXPECT_EQ(doc["stats"][1]["maex"], 6);
    EXPECT_EQ(doc["stats"][1]["class"], "P+");
}

TEST(Cli, SeriesOutputs)
{
    auto r = run({"series", "sigma-mex", "--order", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 20), "1 + 2*q + 3*q^2 + 6*");

    r = run({"series", "j-parts", "--r", "3", "--j", "1", "--order", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["coefficients"].back(), "5");
    EXPECT_EQ(doc["coefficients"].size(), 8u);

    r = run({"series", "gauss", "--n", "4", "--m", "2", "--format", "csv"});
    EXPECT_EQ(r.out, "n,coefficient\n0,1\n1,1\n2,2\n3,1\n4,1\n");
}

TEST(Cli, BijectionTrace)
{
    const auto r = run({"bijection", "gamma", "--lambda", "[5,3,1]", "--i", "2", "--r", "2", "--trace"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    for (const char* key : {"input", "case", "intermediate", "output"})
        EXPECT_TRUE(doc.contains(key)) << key;
    EXPECT_EQ(doc["intermediate"]["conjugate"], "[3,2,2,1,1]");
    EXPECT_EQ(doc["input"]["lambda"], "[5,3,1]");
}

TEST(Cli, BijectionRoundTripThroughText)
{
    auto r = run({"bijection", "phi", "--lambda", "[9,7,6,6,6,1,1,1,1]", "--r", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "[7,4,4,4,4,4,4,3,1,1,1,1]\n");
    r = run({"bijection", "phi", "--inverse", "--lambda", "[7,4,4,4,4,4,4,3,1,1,1,1]", "--r", "3"});
    EXPECT_EQ(r.out, "[9,7,6,6,6,1,1,1,1]\n");
    r = run({"bijection", "gamma-star", "--inverse", "--alpha", "[]", "--color", "2", "--r", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "[] i=2\n");
}

TEST(Cli, VerifyExampleRow)
{
    const auto r = run({"verify", "thm-1.5", "--r", "3", "--j", "1", "--n", "7", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("multiples-repeating,3,1,7,5,5,true,mex_above=5"), std::string::npos);
}

TEST(Cli, VerifyWritesReportFile)
{
    const auto path = std::filesystem::temp_directory_path() / "rchain_cli_report.json";
    const auto r = run({"verify", "thm-1.7", "--r", "1..3", "--n", "12", "--format", "json", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["reports"][0]["check"], "mex-sum-omega");
    EXPECT_EQ(doc["reports"][0]["records"].size(), 39u);
    std::filesystem::remove(path);
}

TEST(Cli, UsageAndContractErrorsExitTwo)
{
    EXPECT_EQ(run({"stats", "[1,2]"}).code, 2);
    EXPECT_EQ(run({"stats", "[1,2]", "--sort"}).code, 0);
    EXPECT_EQ(run({"stats", "[3,x]"}).code, 2);
    EXPECT_EQ(run({"stats", "[3]", "--r", "0"}).code, 2);
    EXPECT_EQ(run({"stats", "[3]", "--unknown"}).code, 2);
    EXPECT_EQ(run({"bijection", "gamma", "--lambda", "[5,3,1]", "--i", "9", "--r", "2"}).code, 2);
    EXPECT_EQ(run({"verify", "thm-9.9"}).code, 2);
    EXPECT_EQ(run({"series", "nope"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const auto r = run({"stats", "[3]", "--format", "xml"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, IntListParsing)
{
    EXPECT_EQ(rchain::cli::parse_int_list("3"), (std::vector<int>{3}));
    EXPECT_EQ(rchain::cli::parse_int_list("1..3,6"), (std::vector<int>{1, 2, 3, 6}));
    EXPECT_THROW(rchain::cli::parse_int_list("3..1"), std::invalid_argument);
    EXPECT_THROW(rchain::cli::parse_int_list("a"), std::invalid_argument);
}

TEST(Cli, EnumerateWithStatFilter)
{
    const auto r = run({"enumerate", "7", "--r", "3", "--stat", "smallest-repeating", "--j", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("count: 5"), std::string::npos);
}
