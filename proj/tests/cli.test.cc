// Copyright 2026 The rtosim Authors
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

#include "rto/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "rtosim");
    std::ostringstream out;
    std::ostringstream err;
    const int status = rto::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST(CliSweep, endpoints_of_sinusoid) {
    const Result r = run({"sweep", "--delta-min", "0", "--delta-max", "pi", "--steps", "3", "--visibility", "1"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "delta,E_exact,p_pp,p_pm,p_mp,p_mm,pA_plus,pB_plus");
    const double expected_e[] = {1.0, 0.0, -1.0};
    for (int k = 0; k < 3; ++k) {
        const auto cols = split(rows[static_cast<std::size_t>(k + 1)], ',');
        ASSERT_EQ(cols.size(), 8u);
        EXPECT_NEAR(std::stod(cols[1]), expected_e[k], 1e-9);
        EXPECT_EQ(cols[6], "0.5");
        EXPECT_EQ(cols[7], "0.5");
    }
}

TEST(CliSweep, zero_visibility_and_mc_columns) {
    const Result r = run({"sweep", "--steps", "5", "--visibility", "0", "--mc", "1000,7"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = lines(r.out);
    EXPECT_EQ(rows[0], "delta,E_exact,p_pp,p_pm,p_mp,p_mm,pA_plus,pB_plus,E_hat,stderr");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto cols = split(rows[k], ',');
        ASSERT_EQ(cols.size(), 10u);
        EXPECT_EQ(cols[1], "0");
    }
}

TEST(CliSweep, json_format) {
    const Result r = run({"sweep", "--steps", "2", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["points"].size(), 2u);
    EXPECT_EQ(doc["points"][0]["E_exact"], 1.0);
}

TEST(CliSweep, usage_errors) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"sweep", "--steps", "1"},
             {"sweep", "--delta-min", "pi", "--delta-max", "0"},
             {"sweep", "--delta-max", "banana"},
             {"sweep", "--visibility", "1.5"},
             {"sweep", "--mc", "100"},
             {"sweep", "--nope"},
             {},
         }) {
        const Result r = run(args);
        EXPECT_NE(r.status, 0);
        EXPECT_EQ(lines(r.err).size(), 1u) << r.err;
        EXPECT_EQ(r.err.rfind("rtosim: error: ", 0), 0u) << r.err;
    }
}

TEST(CliMarginals, singles_only) {
    const Result r = run({"marginals", "--steps", "4", "--visibility", "0.6"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = lines(r.out);
    EXPECT_EQ(rows[0], "delta,pA_plus,pA_minus,pB_plus,pB_minus");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto cols = split(rows[k], ',');
        for (std::size_t c = 1; c < cols.size(); ++c) {
            EXPECT_EQ(cols[c], "0.5");
        }
    }
}

TEST(CliBell, optimal_full_visibility) {
    const Result r = run({"bell", "--optimal", "--visibility", "1", "--samples", "100000", "--seed", "42"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["S_exact"].get<double>(), 2.828427, 1e-6);
    EXPECT_TRUE(doc["violation"].get<bool>());
    EXPECT_EQ(doc["n_per_setting"], 100000);
    EXPECT_EQ(doc["seed"], 42);
    const std::vector<std::string> keys = {"angles", "visibility", "S_exact", "S_hat", "stderr", "n_per_setting", "seed", "violation"};
    std::vector<std::string> got;
    const auto ordered = nlohmann::ordered_json::parse(r.out);
    for (auto it = ordered.begin(); it != ordered.end(); ++it) {
        got.push_back(it.key());
    }
    EXPECT_EQ(got, keys);
}

TEST(CliBell, half_visibility_and_degenerate) {
    const Result half = run({"bell", "--optimal", "--visibility", "0.5", "--samples", "20000"});
    ASSERT_EQ(half.status, 0) << half.err;
    const auto h = nlohmann::json::parse(half.out);
    EXPECT_NEAR(h["S_exact"].get<double>(), 1.414214, 1e-6);
    EXPECT_FALSE(h["violation"].get<bool>());

    const Result degenerate = run({"bell", "--angles", "0,0,0,0", "--samples", "20000"});
    ASSERT_EQ(degenerate.status, 0) << degenerate.err;
    const auto d = nlohmann::json::parse(degenerate.out);
    EXPECT_NEAR(d["S_exact"].get<double>(), 2.0, 1e-9);
    EXPECT_FALSE(d["violation"].get<bool>());
}

TEST(CliBell, usage_errors) {
    EXPECT_EQ(run({"bell"}).status, 2);
    EXPECT_EQ(run({"bell", "--angles", "0,1,2"}).status, 2);
    EXPECT_EQ(run({"bell", "--angles", "0,1,2,x"}).status, 2);
    EXPECT_EQ(run({"bell", "--optimal", "--angles", "0,0,0,0"}).status, 2);
    EXPECT_EQ(run({"bell", "--optimal", "--samples", "1"}).status, 2);
}

TEST(CliPremeasure, report) {
    const Result r = run({"premeasure", "--theta", "0"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["joint_probs"]["A1,D1"].get<double>(), 0.5, 1e-9);
    EXPECT_NEAR(doc["joint_probs"]["A2,D2"].get<double>(), 0.5, 1e-9);
    EXPECT_EQ(doc["joint_probs"]["A1,D2"].get<double>(), 0.0);
    EXPECT_EQ(doc["joint_probs"]["A2,ready"].get<double>(), 0.0);
    EXPECT_EQ(doc["both_clicked_prob"].get<double>(), 0.0);
    EXPECT_EQ(doc["verdict"]["biconditional_reading"], "consistent");
    EXPECT_NE(r.err.find("biconditional"), std::string::npos);

    const Result pi = run({"premeasure", "--theta", "pi"});
    const auto p = nlohmann::json::parse(pi.out);
    EXPECT_NEAR(std::abs(p["correlation_coherence"]["phase"].get<double>()), 3.14159265, 1e-8);
    EXPECT_NEAR(p["correlation_coherence"]["modulus"].get<double>(), 0.5, 1e-9);
    EXPECT_EQ(p["joint_probs"], doc["joint_probs"]);
}

TEST(CliPremeasure, dump_state) {
    const auto path = std::filesystem::temp_directory_path() / "rtosim_dump_test.json";
    const Result r = run({"premeasure", "--theta", "pi/3", "--dump-state", path.string()});
    ASSERT_EQ(r.status, 0) << r.err;
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    EXPECT_EQ(doc["state"]["space"][1][0], "ready");
    EXPECT_EQ(doc["state"]["amplitudes"].size(), 6u);
    EXPECT_EQ(doc["rho_D"]["entries"].size(), 3u);
    std::filesystem::remove(path);
}

TEST(CliSample, perfectly_correlated_stream) {
    const Result r = run({"sample", "--phi-a", "0", "--phi-b", "0", "--samples", "1000", "--seed", "7"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 1000u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto e = nlohmann::json::parse(rows[i]);
        EXPECT_EQ(e["trial"], i);
        EXPECT_EQ(e["a"], e["b"]);
    }
    EXPECT_EQ(rows[0].rfind("{\"trial\": 0, \"phi_a\": 0, \"phi_b\": 0, \"a\": ", 0), 0u) << rows[0];
    EXPECT_EQ(run({"sample", "--phi-a", "0", "--phi-b", "0", "--samples", "1000", "--seed", "7"}).out, r.out);
    EXPECT_NE(r.err.find("E_hat=1 stderr=0"), std::string::npos) << r.err;
}

TEST(CliSample, summary_estimate) {
    const Result r = run({"sample", "--phi-a", "pi/2", "--phi-b", "0", "--samples", "100000", "--seed", "7"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto pos = r.err.find("E_hat=");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_LT(std::abs(std::stod(r.err.substr(pos + 6))), 0.013);
}

TEST(CliSample, thread_count_does_not_change_output) {
    const std::vector<std::string> base = {"sample", "--phi-a", "pi/3", "--phi-b", "0.2", "--visibility", "0.9",
                                           "--samples", "70000", "--seed", "99"};
    auto one = base;
    one.insert(one.end(), {"--threads", "1"});
    auto many = base;
    many.insert(many.end(), {"--threads", "8"});
    EXPECT_EQ(run(one).out, run(many).out);
}

TEST(CliSample, io_error) {
    const Result r = run({"sample", "--samples", "10", "--output", "/nonexistent-dir/x.jsonl"});
    EXPECT_EQ(r.status, 3);
    EXPECT_EQ(lines(r.err).size(), 1u);
}

TEST(CliHelp, per_subcommand) {
    for (const char *sub : {"sweep", "bell", "marginals", "premeasure", "sample"}) {
        const Result r = run({sub, "--help"});
        EXPECT_EQ(r.status, 0);
        EXPECT_NE(r.out.find(sub), std::string::npos);
    }
}
