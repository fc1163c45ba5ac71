#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "partopus/cli.hpp"

using namespace partopus;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = run_cli(args, o, e);
    return {c, o.str(), e.str()};
}

}  // namespace

TEST(Cli, Product) {
    auto r = run({"product", "(3)", "(2|4)"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "(2|6)+(3|5)+(4|4)\n");
    auto j = nlohmann::json::parse(run({"--format", "json", "product", "(3)", "(2|4)"}).out);
    EXPECT_EQ(j["product"]["terms"].size(), 3u);
    EXPECT_NE(run({"--format", "latex", "product", "(1|1)", "(1)"}).out.find("\\mid"), std::string::npos);
}

TEST(Cli, ParseErrorPointsAtOffset) {
    auto r = run({"product", "(1|x)", "(1)"});
    EXPECT_EQ(r.code, kExitParse);
    EXPECT_NE(r.err.find("(1|x)\n     ^"), std::string::npos) << r.err;
    EXPECT_EQ(run({"nprod", "(1|2)", "(2|3)", "(2),(3|y)"}).code, kExitParse);
    EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
}

TEST(Cli, Nprod) {
    auto r = run({"nprod", "(1|2)", "(2|3)", "(2),(3|4)"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "(2|5|5)+(2|6|4)+(5|4|3)\n");
}

TEST(Cli, ComposeCount) {
    auto r = run({"compose", "(4)", "(1|0)", "--target", "(2|2)", "--count"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "(2|2): 12 terms, 6 subdivisions\n");
}

TEST(Cli, IdentityJson) {
    auto r = run({"--format", "json", "identity", "(1|2)", "--kvz"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["options"]["include_type_ii_coefficients"], false);
    EXPECT_EQ(run({"identity", "(2|0)"}).code, kExitParse);
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run({"verify", "--suite", "pre-lie"}).code, kExitOk);
    EXPECT_EQ(run({"verify", "--suite", "phi", "--model", "grassmann2", "--seed", "3", "--samples", "2"}).code, kExitOk);
    // non-associative algebra: rejected as input
    EXPECT_EQ(run({"verify", "--suite", "hochschild", "--model", "witness"}).code, kExitParse);
    EXPECT_EQ(run({"verify", "--suite", "phi", "--model", "grassmann2", "--dim-cap", "2"}).code, kExitParse);
    EXPECT_EQ(run({"verify", "--suite", "hochschild", "--arity-cap", "9"}).code, kExitParse);
}

TEST(Cli, SeedFromEnvironment) {
    setenv("PARTOPUS_SEED", "1234", 1);
    auto j = nlohmann::json::parse(run({"--format", "json", "verify", "--suite", "pre-lie"}).out);
    EXPECT_EQ(j["seed"], 1234u);
    auto k = nlohmann::json::parse(run({"--format", "json", "verify", "--suite", "pre-lie", "--seed", "5"}).out);
    EXPECT_EQ(k["seed"], 5u);
    unsetenv("PARTOPUS_SEED");
}

TEST(Cli, ModelsListing) {
    auto r = run({"models"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("super-matrix"), std::string::npos);
}

TEST(Cli, SplitList) {
    EXPECT_EQ(split_partition_list("(2),(3|4)"), (std::vector<std::string>{"(2)", "(3|4)"}));
}
