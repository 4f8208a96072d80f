// Copyright 2026 The qdiscord Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun invoke(const std::string& args) {
    const std::string cmd = std::string(QDISCORD_CLI) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() / "qdiscord_cli_test";
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }

    std::string catalog(const std::string& name, const std::string& args) {
        const CliRun r = invoke("catalog " + args);
        EXPECT_EQ(r.exit_code, 0) << args;
        return write(name, r.out);
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, AnalyzeBellState) {
    const CliRun r = invoke("analyze " + catalog("bell.json", "bell 0") + " --no-timings");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["rank_L"], 4);
    EXPECT_EQ(doc["is_zero_discord"], false);
    EXPECT_NEAR(doc["geometric_discord"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(doc["entropic_discord"].get<double>(), 1.0, 1e-4);
    EXPECT_NEAR(doc["mutual_information"].get<double>(), 2.0, 1e-10);
}

TEST_F(CliTest, AnalyzeIsStableWithoutTimings) {
    const std::string path = catalog("four.json", "four-nonorthogonal");
    const CliRun a = invoke("analyze " + path + " --no-timings --ent-grid 512");
    const CliRun b = invoke("analyze " + path + " --no-timings --ent-grid 512");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out)["entropic"]["optimizer"]["grid_points"], 512);
}

TEST_F(CliTest, ToleranceFlagsReachTheTest) {
    const std::string path = catalog("pair.json", "classical-pair");
    const auto doc = nlohmann::json::parse(invoke("analyze " + path + " --no-entropic --comm-tol 1e-6 --rank-tol 1e-8").out);
    EXPECT_EQ(doc["is_zero_discord"], true);
    EXPECT_FALSE(doc.contains("entropic_discord"));
}

TEST_F(CliTest, CatalogRoundtrip) {
    const std::string path = catalog("facet.json", "facet 1,-1,1");
    EXPECT_EQ(invoke("catalog facet 1,-1,1").out, invoke("catalog facet 1,-1,1").out);
    const auto doc = nlohmann::json::parse(invoke("geometric " + path).out);
    EXPECT_NEAR(doc["geometric_discord"].get<double>(), 1.0 / 18.0, 1e-12);
    const CliRun rnd = invoke("catalog random --dims 3,2 --seed 5");
    ASSERT_EQ(rnd.exit_code, 0);
    EXPECT_EQ(nlohmann::json::parse(rnd.out)["dims"], nlohmann::json({3, 2}));
}

TEST_F(CliTest, GeometricOracle) {
    const CliRun r = invoke("geometric " + catalog("bell.json", "bell 1") + " --oracle --restarts 4");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NEAR(nlohmann::json::parse(r.out)["oracle"]["value"].get<double>(), 0.5, 1e-6);
}

TEST_F(CliTest, EntropicSides) {
    const std::string path = catalog("demo.json", "nonmonotonic-demo");
    const double a = nlohmann::json::parse(invoke("entropic " + path + " --side A").out)["entropic_discord"].get<double>();
    const double b = nlohmann::json::parse(invoke("entropic " + path + " --side B").out)["entropic_discord"].get<double>();
    EXPECT_GT(a, 1e-3);
    EXPECT_LE(b, 1e-6);
    EXPECT_EQ(invoke("entropic " + path + " --side C").exit_code, 2);
}

TEST_F(CliTest, WitnessFromRows) {
    const std::string rows = write("rows.json", R"({"dimA": 2, "dimB": 2, "rows": [
        {"a_index": 1, "values": [0, 0.5, 0, 0]},
        {"a_index": 2, "values": [0, 0, -0.5, 0]},
        {"a_index": 3, "values": [0, 0, 0, 0.5]}]})");
    const CliRun r = invoke("witness " + rows);
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["discord_proven"], true);
    EXPECT_EQ(doc["independent_count"], 3);
}

TEST_F(CliTest, Dqc1Random) {
    const CliRun r = invoke("dqc1 --random-n 3 --seed 2 --alpha 0.5 --samples 100000 --sample-seed 1");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["classicality"]["zero_discord"], false);
    EXPECT_LT(doc["deviation_sigmas"].get<double>(), 5.0);
}

TEST_F(CliTest, Dqc1UnitaryFile) {
    const std::string u = write("u.json", R"({"matrix": [[[0,0],[1,0]],[[1,0],[0,0]]]})");
    const auto doc = nlohmann::json::parse(invoke("dqc1 --unitary " + u + " --alpha 1").out);
    EXPECT_EQ(doc["classicality"]["zero_discord"], true);
    EXPECT_EQ(doc["exact_tau"], nlohmann::json({0.0, 0.0}));
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(invoke("dqc1 --random-n 2 --alpha 0").exit_code, 2);
    EXPECT_EQ(invoke("dqc1 --random-n 2").exit_code, 2);
    EXPECT_EQ(invoke("dqc1 --alpha 0.5").exit_code, 2);
    EXPECT_EQ(invoke("catalog unknown-state").exit_code, 2);
    EXPECT_EQ(invoke("catalog bell-diagonal 2,0,0").exit_code, 2);
    EXPECT_EQ(invoke("catalog bell 7").exit_code, 2);
    EXPECT_EQ(invoke("analyze " + write("bad.json", "{\"dims\": [2, 2], \"matrix\": [")).exit_code, 2);
    EXPECT_EQ(invoke("analyze " + write("nonpsd.json", R"({"dims":[1,2],"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]})")).exit_code, 2);
    EXPECT_EQ(invoke("analyze /nonexistent.json").exit_code, 2);
    EXPECT_EQ(invoke("nosuchcommand").exit_code, 2);
    EXPECT_EQ(invoke("").exit_code, 2);
    EXPECT_EQ(invoke("--help").exit_code, 0);
}
