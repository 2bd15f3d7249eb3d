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

#include "rto/coherence.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rto/parallel.h"

namespace rto {

Singles marginals(const JointDistribution &j) {
    const auto &t = j.table();
    return Singles{
        .a_plus = t[0][0] + t[0][1],
        .a_minus = t[1][0] + t[1][1],
        .b_plus = t[0][0] + t[1][0],
        .b_minus = t[0][1] + t[1][1],
    };
}

double correlation(const JointDistribution &j) {
    const auto &t = j.table();
    return t[0][0] + t[1][1] - t[0][1] - t[1][0];
}

SweepResult sweep_correlation(std::span<const double> grid, const Visibility &vis, unsigned threads) {
    if (grid.empty()) {
        throw std::invalid_argument("sweep grid must not be empty");
    }
    const std::size_t n = grid.size();
    SweepResult out;
    out.delta_grid.assign(grid.begin(), grid.end());
    out.correlations.resize(n);
    out.singles.resize(n);
    out.joint.resize(n);
    out.visibility_used = vis;
    parallel_for(n, threads, [&](std::size_t i) {
        const JointDistribution j = rto_joint_distribution(PhaseSettings(grid[i], 0.0), vis);
        out.correlations[i] = correlation(j);
        out.singles[i] = marginals(j);
        out.joint[i] = j.table();
    });
    return out;
}

double fringe_visibility(std::span<const double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("fringe visibility needs at least two values");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double sum = *hi + *lo;
    if (sum == 0.0) {
        return 0.0;
    }
    return (*hi - *lo) / sum;
}

ChshSettings optimal_chsh_settings() {
    constexpr double pi = std::numbers::pi;
    return ChshSettings{.a = 0.0, .a_prime = pi / 2, .b = pi / 4, .b_prime = -pi / 4};
}

std::array<PhaseSettings, 4> chsh_setting_pairs(const ChshSettings &s) {
    return {PhaseSettings(s.a, s.b), PhaseSettings(s.a, s.b_prime), PhaseSettings(s.a_prime, s.b),
            PhaseSettings(s.a_prime, s.b_prime)};
}

double chsh(const ChshSettings &s, const Visibility &vis) {
    const auto pairs = chsh_setting_pairs(s);
    std::array<double, 4> e{};
    for (std::size_t k = 0; k < 4; ++k) {
        e[k] = correlation(rto_joint_distribution(pairs[k], vis));
    }
    return e[0] + e[1] + e[2] - e[3];
}

double l1_coherence(const DensityMatrix &rho) {
    double total = 0.0;
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            if (r != c) {
                total += std::abs(rho(r, c));
            }
        }
    }
    return total;
}

namespace {

double max_singles_deviation(const JointDistribution &j) {
    const Singles s = marginals(j);
    return std::max(std::abs(s.a_plus - 0.5), std::abs(s.b_plus - 0.5));
}

}  // namespace

double no_signaling_check(double phi_a, std::span<const double> phi_b_grid, const Visibility &vis) {
    if (phi_b_grid.empty()) {
        throw std::invalid_argument("no-signaling grid must not be empty");
    }
    double worst = 0.0;
    for (double phi_b : phi_b_grid) {
        worst = std::max(worst, max_singles_deviation(rto_joint_distribution(PhaseSettings(phi_a, phi_b), vis)));
    }
    return worst;
}

double no_signaling_check_b(double phi_b, std::span<const double> phi_a_grid, const Visibility &vis) {
    if (phi_a_grid.empty()) {
        throw std::invalid_argument("no-signaling grid must not be empty");
    }
    double worst = 0.0;
    for (double phi_a : phi_a_grid) {
        worst = std::max(worst, max_singles_deviation(rto_joint_distribution(PhaseSettings(phi_a, phi_b), vis)));
    }
    return worst;
}

}  // namespace rto
