#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int status = ellarc::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

} // namespace

TEST(Cli, VerifySeriesText)
{
    const auto r = run({"verify-series", "--order", "12"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("-273/128"), std::string::npos);
    EXPECT_NE(r.out.find("-269/128"), std::string::npos);
    EXPECT_NE(r.out.find("-1/32"), std::string::npos);
    EXPECT_NE(r.out.find("goldens: 0 mismatched"), std::string::npos);
}

TEST(Cli, VerifySeriesTsvMarksDerivedRows)
{
    const auto r = run({"verify-series", "--order", "20", "--format", "tsv"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 22u);
    EXPECT_EQ(rows[0], "power\th_series\ttrue_series\tapprox_series\tdifference\tsource");
    EXPECT_EQ(rows[7], "6\t441/1048576\t-273/128\t-269/128\t-1/32\treference");
    EXPECT_TRUE(rows[9].ends_with("\treference"));
    for (std::size_t k = 9; k <= 20; ++k) {
        EXPECT_TRUE(rows[k + 1].ends_with("\tderived")) << rows[k + 1];
    }
}

TEST(Cli, VerifySeriesRejectsShortOrder)
{
    const auto r = run({"verify-series", "--order", "6"});
    EXPECT_EQ(r.status, 1);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).status, 1);
    EXPECT_EQ(run({"frobnicate"}).status, 1);
    EXPECT_EQ(run({"verify-series", "--bogus"}).status, 1);
    EXPECT_EQ(run({"verify-series", "--format", "xml"}).status, 1);
    EXPECT_EQ(run({"cfrac", "--depth", "0"}).status, 1);
    EXPECT_EQ(run({"cfrac", "--depth", "4", "--freeze", "three"}).status, 1);
    EXPECT_EQ(run({"invert", "--perimeter", "7"}).status, 1);
    EXPECT_EQ(run({"error-table", "--abs-tol", "-1"}).status, 1);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, Cfrac)
{
    const auto r = run({"cfrac", "--depth", "4"});
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("partial_coeffs: 1/2, 3/4, 3/4, 31/36\n"), std::string::npos) << r.out;
    EXPECT_NE(r.err.find("a4 computed 31/36, published 29/18"), std::string::npos) << r.err;

    const auto one = run({"cfrac", "--depth", "1"});
    EXPECT_NE(one.out.find("partial_coeffs: 1/2\n"), std::string::npos);
    EXPECT_TRUE(one.err.empty());
}

TEST(Cli, CfracFreezePrintsClosedForm)
{
    const auto r = run({"cfrac", "--depth", "4", "--freeze", "3/4"});
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("closed_form: 4h - 3h^2/(2 + sqrt(1 - 3h))\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("tail: B = (1 + sqrt(1 - 3h))/2\n"), std::string::npos);
    EXPECT_NE(r.out.find("agreeing_convergents: 4\n"), std::string::npos);

    const auto alt = run({"cfrac", "--depth", "4", "--freeze", "1/2", "--freeze-from", "1"});
    EXPECT_EQ(alt.status, 0);
    EXPECT_EQ(alt.out.find("closed_form"), std::string::npos);
    EXPECT_NE(alt.err.find("NotInRamanujanShape"), std::string::npos);
}

TEST(Cli, ErrorTable)
{
    const auto r = run({"error-table", "--lambda-min", "0", "--lambda-max", "0.2", "--steps", "20"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 22u);
    EXPECT_EQ(rows[0], "lambda\th\tlambda_sq_true\tlambda_sq_approx\tdiff\tnormalized");

    EXPECT_EQ(run({"error-table", "--lambda-min", "0", "--lambda-max", "0", "--steps", "1"}).status, 1);
    EXPECT_EQ(run({"error-table", "--lambda-min", "0.5", "--lambda-max", "1"}).status, 1);
}

TEST(Cli, ErrorTableLargeLambdaAllOverestimate)
{
    const auto r = run({"error-table", "--lambda-min", "0.5", "--lambda-max", "0.99", "--steps", "10"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 12u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream is(rows[i]);
        double lambda, h, t, a, diff;
        is >> lambda >> h >> t >> a >> diff;
        EXPECT_LT(diff, 0) << rows[i];
    }
}

TEST(Cli, Invert)
{
    const auto circle = run({"invert", "--perimeter", "6.283185307179586", "--sum", "2"});
    ASSERT_EQ(circle.status, 0);
    EXPECT_NE(circle.out.find("a: 1\nb: 1\n"), std::string::npos) << circle.out;

    const auto two_one = run({"invert", "--perimeter", "9.688448220547676", "--sum", "3"});
    ASSERT_EQ(two_one.status, 0);
    std::istringstream is(two_one.out);
    std::string key;
    double a = 0, b = 0;
    is >> key >> a >> key >> b;
    EXPECT_NEAR(a, 2, 1e-8);
    EXPECT_NEAR(b, 1, 1e-8);

    const auto bad = run({"invert", "--perimeter", "100", "--sum", "1"});
    EXPECT_EQ(bad.status, 2);
    EXPECT_NE(bad.err.find("4*s"), std::string::npos);
}

TEST(Cli, Deterministic)
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"verify-series", "--order", "14", "--format", "tsv"},
             {"cfrac", "--depth", "6", "--freeze", "3/4"},
             {"error-table", "--lambda-min", "0.1", "--lambda-max", "0.7", "--steps", "6"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
}

TEST(Cli, OutWritesFile)
{
    const auto path = std::filesystem::temp_directory_path() / "ellarc_cli_test.tsv";
    std::filesystem::remove(path);
    const auto r = run({"verify-series", "--format", "tsv", "--out", path.string()});
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), run({"verify-series", "--format", "tsv"}).out);
    EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
}
