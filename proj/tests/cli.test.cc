// Copyright 2026 The Phasecap Authors
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

#include "phasecap/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "phasecap/codes.h"
#include "phasecap/noise.h"

using namespace phasecap;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
   public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("phasecap_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::filesystem::remove_all(path_);
    }
    std::string file(const std::string &name) const {
        return (path_ / name).string();
    }

   private:
    std::filesystem::path path_;
};

nlohmann::json read_json(const std::string &path) {
    std::ifstream in(path);
    return nlohmann::json::parse(in);
}

}  // namespace

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"capacity"}).code, kExitUsage);
    EXPECT_EQ(run({"capacity", "--uniform", "--n", "8", "--t", "1", "--q", "4"}).code, kExitUsage);
    EXPECT_EQ(run({"capacity", "--model", "/nonexistent/model.json"}).code, kExitUsage);
    EXPECT_EQ(run({"code", "build", "no-such-code"}).code, kExitUsage);
    EXPECT_EQ(run({"report", "paper-tables", "--row", "no_such_row"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli, capacity_uniform) {
    TempDir dir;
    auto r = run({"capacity", "--uniform", "--n", "8", "--t", "1", "--exact", "--theta", "--bounds", "--json",
                  dir.file("cap.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("20 (exact)"), std::string::npos) << r.out;
    auto j = read_json(dir.file("cap.json"));
    EXPECT_EQ(j["alpha"]["value"], 20);
    EXPECT_EQ(j["difference_size"], 36);
    EXPECT_EQ(j["bounds"]["hamming"], 28);
    EXPECT_EQ(j["bounds"]["singleton"], 64);
    EXPECT_NEAR(j["theta"]["value"].get<double>(), 25.6, 1e-6);
}

TEST(cli, capacity_budget_exhaustion_is_analysis_failure) {
    auto r = run({"capacity", "--uniform", "--n", "8", "--t", "1", "--exact", "--max-nodes", "10", "--no-symmetry"});
    EXPECT_EQ(r.code, kExitAnalysisFailure);
}

TEST(cli, capacity_from_model_file) {
    TempDir dir;
    save_noise_model(correlated_ring_model(8), dir.file("ring.json"));
    auto r = run({"capacity", "--model", dir.file("ring.json"), "--exact", "--classify", "--json", dir.file("o.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = read_json(dir.file("o.json"));
    EXPECT_EQ(j["alpha"]["value"], 9);
    EXPECT_EQ(j["difference_size"], 96);
    EXPECT_FALSE(j["regime"]["dispersive"].get<bool>());
}

TEST(cli, code_round_trip) {
    TempDir dir;
    std::string path = dir.file("nr.json");
    ASSERT_EQ(run({"code", "build", "nordstrom-robinson", "--out", path}).code, kExitOk);
    auto j = read_json(path);
    EXPECT_EQ(j["K"], 256);
    EXPECT_EQ(j["d"], 6);
    EXPECT_EQ(j["structure"], "nonlinear");
    EXPECT_EQ(run({"code", "verify", "--file", path, "--t", "2"}).code, kExitOk);
    EXPECT_EQ(run({"code", "verify", "--file", path, "--t", "3"}).code, kExitAnalysisFailure);
    auto c = run({"code", "classify", "--file", path});
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_NE(c.out.find("nonlinear"), std::string::npos);

    std::string rm = dir.file("rm.json");
    ASSERT_EQ(run({"code", "build", "rm1", "--m", "4", "--out", rm}).code, kExitOk);
    EXPECT_NE(run({"code", "classify", "--file", rm}).out.find("linear"), std::string::npos);
}

TEST(cli, decode_commands) {
    auto r = run({"decode", "--code", "nordstrom-robinson", "--received", "0000000000000011"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("0000000000000000"), std::string::npos) << r.out;
    auto trials = run({"decode", "--code", "julin", "--trials", "200", "--t", "1", "--seed", "5"});
    EXPECT_EQ(trials.code, kExitOk) << trials.err;
    EXPECT_EQ(run({"decode", "--code", "nordstrom-robinson", "--trials", "10", "--t", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"decode", "--code", "nordstrom-robinson", "--received", "0101"}).code, kExitUsage);
}

TEST(cli, kl_verify) {
    auto r = run({"kl-verify", "--n", "4", "--t", "1", "--samples", "50", "--seed", "3"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    auto ring = run({"kl-verify", "--correlated-ring", "4", "--samples", "50"});
    EXPECT_EQ(ring.code, kExitOk) << ring.err;
    EXPECT_EQ(run({"kl-verify", "--n", "13", "--t", "1"}).code, kExitUsage);
}

TEST(cli, dual_command) {
    TempDir dir;
    save_noise_model(uniform_ball_model(GroupParams::make(2, 8), 1), dir.file("u.json"));
    auto r = run({"dual", "--x", dir.file("u.json"), "--z", dir.file("u.json"), "--json", dir.file("d.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = read_json(dir.file("d.json"));
    EXPECT_NEAR(j["coupled"].get<double>(), 256.0 / 9.0, 1e-9);
}

TEST(cli, report_single_row) {
    TempDir dir;
    auto r = run({"report", "paper-tables", "--row", "theta_corr", "--json", dir.file("t.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = read_json(dir.file("t.json"));
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0]["id"], "theta_corr");
    EXPECT_TRUE(j["all_match"].get<bool>());
}
