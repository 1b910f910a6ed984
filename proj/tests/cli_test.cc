// Copyright 2026 The icgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icgame/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "icgame/json_io.h"

namespace icgame {
namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return Json::parse(r.out);
}

std::string temp_file(const std::string &name, const std::string &content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

TEST(Cli, RacMajority) {
    const auto r = run({"rac", "--n", "2", "--m", "1", "--strategy", "majority"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("P = 0.750000"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("I = 1.000000"), std::string::npos) << r.out;
    const auto j = run_json({"rac", "--n", "2", "--m", "1", "--strategy", "majority"});
    EXPECT_DOUBLE_EQ(j.at("report").at("success_probability").get<double>(), 0.75);
    EXPECT_NEAR(j.at("verdict").at("I_bits").get<double>(), 1.0, 1e-12);
}

TEST(Cli, RacChsh) {
    const auto j = run_json({"rac", "--n", "2", "--m", "1", "--strategy", "chsh:0.70710678"});
    EXPECT_NEAR(j.at("report").at("success_probability").get<double>(), 0.853553, 1e-6);
    EXPECT_EQ(j.at("verdict").at("status").get<std::string>(), "holds");
}

TEST(Cli, RacPrPyramidViolates) {
    const std::vector<std::string> args{"rac", "--n", "4", "--m", "1", "--strategy", "pyramid:1:2"};
    const auto j = run_json(args);
    EXPECT_NEAR(j.at("report").at("success_probability").get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j.at("verdict").at("I_bits").get<double>(), 4.0, 1e-12);
    EXPECT_EQ(j.at("verdict").at("status").get<std::string>(), "violated");
    auto strict = args;
    strict.push_back("--expect-holds");
    EXPECT_EQ(run(strict).code, kExitBoundViolated);
    EXPECT_EQ(run(args).code, kExitOk);
}

TEST(Cli, RacCsv) {
    const auto r = run({"rac", "--strategy", "send-first:1", "--format", "csv"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "k,E_k,I_c\n1,1,1\n2,0,0\n");
}

TEST(Cli, RacWithDistributionFile) {
    const auto path = temp_file("icgame_cli_dist.json", "[0.97, 0.01, 0.01, 0.01]");
    const auto j = run_json({"rac", "--strategy", "send-first:1", "--dist", path});
    EXPECT_NE(j.at("verdict").at("status").get<std::string>(), "violated");
    EXPECT_EQ(j.at("verdict").at("form").get<std::string>(), "sum_k H(x_k|beta_k) >= H(x) - H(alpha)");
    std::filesystem::remove(path);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
    const std::vector<std::string> args{"rac", "--strategy", "mix:send-bit:1,0.5;send-bit:2,0.5", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> suite{"entropy-suite", "--trials", "50", "--seed", "9", "--format", "json"};
    EXPECT_EQ(run(suite).out, run(suite).out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"rac", "--strategy", "bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"rac", "--n", "three"}).code, kExitUsage);
    EXPECT_EQ(run({"rac", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"rac", "--strategy", "chsh:0.5", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"bounds", "--biases", "/nonexistent/biases.json"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, ResourceErrors) {
    EXPECT_EQ(run({"rac", "--n", "9", "--strategy", "majority"}).code, kExitResource);
    EXPECT_EQ(run({"rac", "--n", "30", "--strategy", "majority"}).code, kExitResource);
    EXPECT_EQ(run({"oracle", "--n", "3", "--m", "2"}).code, kExitResource);
    EXPECT_EQ(run({"rac", "--n", "9", "--strategy", "majority", "--cap", "9"}).code, kExitOk);
}

TEST(Cli, BoundsFromFile) {
    const auto tsirelson = temp_file("icgame_cli_b1.json", "[0.7071067811865476, 0.7071067811865476]");
    const auto j = run_json({"bounds", "--biases", tsirelson});
    ASSERT_EQ(j.at("bounds").size(), 3u);
    EXPECT_EQ(j.at("bounds")[0].at("status").get<std::string>(), "pass");
    EXPECT_EQ(j.at("bounds")[1].at("kind").get<std::string>(), "inner_product");
    EXPECT_EQ(j.at("bounds")[1].at("status").get<std::string>(), "saturated");
    EXPECT_DOUBLE_EQ(j.at("bounds")[2].at("rhs").get<double>(), 1.0);

    const auto pr = temp_file("icgame_cli_b2.json", "[1, 1]");
    EXPECT_EQ(run({"bounds", "--biases", pr, "--expect-holds"}).code, kExitBoundViolated);
    const auto broken = temp_file("icgame_cli_b3.json", "[1, ");
    EXPECT_EQ(run({"bounds", "--biases", broken}).code, kExitUsage);
    for (const auto &p : {tsirelson, pr, broken}) {
        std::filesystem::remove(p);
    }
}

TEST(Cli, BoundsFromStrategy) {
    const auto j = run_json({"bounds", "--n", "4", "--strategy", "pyramid:tsirelson:2"});
    EXPECT_NEAR(j.at("bounds")[1].at("lhs").get<double>(), 1.0, 1e-12);
}

TEST(Cli, InnerProductBoxes) {
    auto j = run_json({"inner-product", "--n", "2", "--box", "gram-uniform"});
    EXPECT_NEAR(j.at("report").at("success_probability").get<double>(), 0.75, 1e-12);
    j = run_json({"inner-product", "--n", "2", "--box", "classical", "--alpha", "3"});
    EXPECT_EQ(j.at("bounds")[0].at("status").get<std::string>(), "saturated");
    EXPECT_EQ(run({"inner-product", "--n", "2", "--box", "pr", "--hw1", "--expect-holds"}).code, kExitBoundViolated);
    j = run_json({"inner-product", "--n", "3", "--box", "isotropic", "--bias", "0"});
    EXPECT_NEAR(j.at("report").at("success_probability").get<double>(), 0.5, 1e-12);
    EXPECT_EQ(run({"inner-product", "--box", "mystery"}).code, kExitUsage);
}

TEST(Cli, InnerProductBoxFile) {
    const auto path = temp_file("icgame_cli_box.json", to_json(isotropic_box(1.0)).dump());
    const auto j = run_json({"inner-product", "--n", "1", "--box-file", path});
    EXPECT_NEAR(j.at("report").at("success_probability").get<double>(), 1.0, 1e-12);
    std::filesystem::remove(path);
}

TEST(Cli, Oracle) {
    const auto j = run_json({"oracle", "--n", "2", "--m", "1"});
    EXPECT_EQ(j.at("strategies").get<std::uint64_t>(), 256u);
    EXPECT_DOUBLE_EQ(j.at("max_success").get<double>(), 0.75);
    EXPECT_NEAR(j.at("max_I_bits").get<double>(), 1.0, 1e-12);
    EXPECT_EQ(j.at("endpoint_violations").get<int>(), 0);
}

TEST(Cli, EntropySuite) {
    const auto r = run({"entropy-suite", "--trials", "100", "--expect-holds"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("holds"), std::string::npos);
}

TEST(Cli, TsirelsonDemo) {
    auto j = run_json({"tsirelson-demo", "--bias", "0.75", "--levels", "4"});
    const auto &rows = j.at("rows");
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_NEAR(rows[0].at("sum_sq_bias").get<double>(), 1.125, 1e-12);
    EXPECT_FALSE(rows[0].at("exceeds").get<bool>());
    EXPECT_NEAR(rows[3].at("sum_sq_bias").get<double>(), 1.601806640625, 1e-12);
    EXPECT_TRUE(rows[3].at("exceeds").get<bool>());
    EXPECT_EQ(rows[2].at("method").get<std::string>(), "exact");
    EXPECT_EQ(rows[3].at("method").get<std::string>(), "formula");

    j = run_json({"tsirelson-demo", "--bias", "tsirelson"});
    for (const auto &row : j.at("rows")) {
        EXPECT_NEAR(row.at("sum_sq_bias").get<double>(), 1.0, 1e-12);
    }
    EXPECT_EQ(run({"tsirelson-demo", "--bias", "0.75", "--expect-holds"}).code, kExitBoundViolated);
}

TEST(Cli, TableNumbersHaveSixDecimals) {
    const auto r = run({"rac", "--strategy", "chsh:tsirelson"});
    EXPECT_NE(r.out.find("P = 0.853553\n"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace icgame
