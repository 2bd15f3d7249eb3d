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

#include "rto/montecarlo.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace rto;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<EventRecord> stream(double phi_a, double phi_b, double v, std::size_t n, std::uint64_t seed) {
    return sample_events(rto_joint_distribution(PhaseSettings(phi_a, phi_b), Visibility(v)), n, seed);
}

bool same_stream(const std::vector<EventRecord> &x, const std::vector<EventRecord> &y) {
    if (x.size() != y.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].trial != y[i].trial || x[i].outcome_a != y[i].outcome_a || x[i].outcome_b != y[i].outcome_b) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(SplitMix64, reference_outputs) {
    // Published reference sequence for state 0.
    SplitMix64 g(0);
    EXPECT_EQ(g.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(g.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(g.next(), 0x06C45D188009454FULL);

    SplitMix64 h(42);
    EXPECT_EQ(h.uniform(), 0.7415648787718233);
    EXPECT_EQ(h.uniform(), 0.1599103928769201);
}

TEST(SplitMix64, sub_seeds) {
    EXPECT_EQ(sub_seed(42, 0), 0xBDD732262FEB6E95ULL);
    EXPECT_EQ(sub_seed(42, 1), 0xBA69EC90EB4FEF88ULL);
    EXPECT_EQ(sub_seed(42, 2), 0xFB452912299A5453ULL);
    EXPECT_EQ(sub_seed(42, 3), 0xF7E9F3F88CC04AD6ULL);
}

TEST(SplitMix64, uniform_range) {
    SplitMix64 g(123);
    for (int i = 0; i < 100000; ++i) {
        const double u = g.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(SampleEvents, equal_phases_always_match) {
    const auto events = stream(0.0, 0.0, 1.0, 10000, 5);
    for (const EventRecord &e : events) {
        ASSERT_EQ(e.outcome_a, e.outcome_b);
    }
}

TEST(SampleEvents, deterministic_with_increasing_trials) {
    const auto x = stream(1.0, 0.3, 0.8, 5000, 77);
    const auto y = stream(1.0, 0.3, 0.8, 5000, 77);
    EXPECT_TRUE(same_stream(x, y));
    EXPECT_FALSE(same_stream(x, stream(1.0, 0.3, 0.8, 5000, 78)));
    for (std::size_t i = 1; i < x.size(); ++i) {
        ASSERT_GT(x[i].trial, x[i - 1].trial);
    }
}

TEST(SampleEvents, uniform_frequencies) {
    const std::size_t n = 1000000;
    const auto events = sample_events(JointDistribution::uniform(), n, 2718);
    std::size_t counts[2][2] = {};
    for (const EventRecord &e : events) {
        ++counts[JointDistribution::idx(e.outcome_a)][JointDistribution::idx(e.outcome_b)];
    }
    for (auto &row : counts) {
        for (std::size_t c : row) {
            // 4 sigma with sigma = sqrt(0.25 * 0.75 / 1e6) = 4.33e-4.
            EXPECT_NEAR(static_cast<double>(c) / n, 0.25, 0.002);
        }
    }
}

TEST(SampleEvents, rejects_zero) {
    EXPECT_THROW(sample_events(JointDistribution::uniform(), 0, 1), std::invalid_argument);
}

TEST(EstimateCorrelation, constant_stream) {
    const auto events = stream(0.0, 0.0, 1.0, 1000, 3);
    const EstimatorResult r = estimate_correlation(events);
    EXPECT_EQ(r.estimate, 1.0);
    EXPECT_EQ(r.std_error, 0.0);
    EXPECT_EQ(r.n, 1000u);
}

TEST(EstimateCorrelation, statistics) {
    const std::size_t n = 100000;
    const EstimatorResult zero = estimate_correlation(stream(kPi / 2, 0.0, 1.0, n, 11));
    EXPECT_NEAR(zero.estimate, 0.0, 4.0 / std::sqrt(static_cast<double>(n)));
    EXPECT_NEAR(zero.std_error, 1.0 / std::sqrt(static_cast<double>(n)), 1e-5);

    const EstimatorResult half = estimate_correlation(stream(0.0, 0.0, 0.5, n, 12));
    EXPECT_NEAR(half.estimate, 0.5, 0.011);
    EXPECT_NEAR(half.std_error, std::sqrt(0.75 / n), 2e-5);
}

TEST(EstimateCorrelation, needs_two_events) {
    const auto one = stream(0.0, 0.0, 1.0, 1, 1);
    EXPECT_THROW(estimate_correlation(one), std::invalid_argument);
    EXPECT_THROW(estimate_single(one, Party::A), std::invalid_argument);
}

TEST(EstimateCorrelation, stderr_scales_inverse_sqrt_n) {
    const EstimatorResult small = estimate_correlation(stream(kPi / 3, 0.0, 0.9, 10000, 21));
    const EstimatorResult large = estimate_correlation(stream(kPi / 3, 0.0, 0.9, 1000000, 22));
    EXPECT_NEAR(small.std_error / large.std_error, 10.0, 1.0);
}

TEST(EstimateSingle, flat_over_phase_sweep) {
    for (int k = 0; k < 16; ++k) {
        const auto events = stream(0.3, 2 * kPi * k / 16, 1.0, 20000, 100 + k);
        const EstimatorResult a = estimate_single(events, Party::A);
        const EstimatorResult b = estimate_single(events, Party::B);
        EXPECT_LT(std::abs(a.estimate - 0.5), 4 * a.std_error);
        EXPECT_LT(std::abs(b.estimate - 0.5), 4 * b.std_error);
    }
}

TEST(SampleSweep, consistent_with_cosine) {
    std::vector<double> grid;
    for (int k = 0; k < 16; ++k) {
        grid.push_back(kPi * k / 15);
    }
    const double v = 0.9;
    const auto est = sample_sweep(grid, Visibility(v), 100000, 2024, 2);
    int outliers = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (std::abs(est[k].estimate - v * std::cos(grid[k])) > 4 * est[k].std_error) {
            ++outliers;
        }
    }
    EXPECT_LE(outliers, 2);
    const auto again = sample_sweep(grid, Visibility(v), 100000, 2024, 1);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        EXPECT_EQ(est[k].estimate, again[k].estimate);
    }
}

TEST(BellExperiment, decisive_violation_at_full_visibility) {
    const BellResult r = bell_experiment(optimal_chsh_settings(), Visibility(1.0), 100000, 42, 4);
    EXPECT_LT(std::abs(r.s.estimate - 2.0 * std::sqrt(2.0)), 4 * r.s.std_error);
    EXPECT_GT(r.s.estimate - 2.0, 5 * r.s.std_error);
    double var = 0.0;
    for (const auto &t : r.terms) {
        var += t.std_error * t.std_error;
    }
    EXPECT_EQ(r.s.std_error, std::sqrt(var));
}

TEST(BellExperiment, no_violation_below_threshold) {
    const double v = 1.0 / std::sqrt(2.0) - 0.05;
    const BellResult r = bell_experiment(optimal_chsh_settings(), Visibility(v), 1000000, 9, 4);
    EXPECT_LT(r.s.estimate, 2.0 + 4 * r.s.std_error);
}

TEST(BellExperiment, zero_visibility) {
    const BellResult r = bell_experiment(optimal_chsh_settings(), Visibility(0.0), 100000, 5, 1);
    EXPECT_LT(std::abs(r.s.estimate), 4 * r.s.std_error);
}

TEST(BellExperiment, thread_count_does_not_matter) {
    const BellResult one = bell_experiment(optimal_chsh_settings(), Visibility(0.95), 50000, 1234, 1);
    const BellResult four = bell_experiment(optimal_chsh_settings(), Visibility(0.95), 50000, 1234, 4);
    EXPECT_EQ(one.s.estimate, four.s.estimate);
    EXPECT_EQ(one.s.std_error, four.s.std_error);
}

TEST(BellExperiment, uses_documented_sub_seeds) {
    const ChshSettings s = optimal_chsh_settings();
    const auto pairs = chsh_setting_pairs(s);
    const BellResult r = bell_experiment(s, Visibility(1.0), 1000, 42, 1);
    for (std::size_t k = 0; k < 4; ++k) {
        const auto events = sample_events(rto_joint_distribution(pairs[k], Visibility(1.0)), 1000, splitmix64(42 + k));
        EXPECT_EQ(r.terms[k].estimate, estimate_correlation(events).estimate);
    }
    EXPECT_THROW(bell_experiment(s, Visibility(1.0), 1, 42), std::invalid_argument);
}
