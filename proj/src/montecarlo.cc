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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rto/parallel.h"

namespace rto {

std::uint64_t splitmix64(std::uint64_t x) { return SplitMix64(x).next(); }

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<EventRecord> sample_events(const JointDistribution &j, std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    const auto &t = j.table();
    const double c0 = t[0][0];
    const double c1 = c0 + t[0][1];
    const double c2 = c1 + t[1][0];

    SplitMix64 rng(seed);
    std::vector<EventRecord> events(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform();
        EventRecord &e = events[i];
        e.trial = i;
        e.settings = j.settings();
        if (u < c0) {
            e.outcome_a = Port::Plus;
            e.outcome_b = Port::Plus;
        } else if (u < c1) {
            e.outcome_a = Port::Plus;
            e.outcome_b = Port::Minus;
        } else if (u < c2) {
            e.outcome_a = Port::Minus;
            e.outcome_b = Port::Plus;
        } else {
            e.outcome_a = Port::Minus;
            e.outcome_b = Port::Minus;
        }
    }
    return events;
}

namespace {

// Sample mean and stderr of a +/-1 or 0/1 valued series given its sum and sum
// of squares.
EstimatorResult mean_with_stderr(double sum, double sum_sq, std::size_t n) {
    const double nn = static_cast<double>(n);
    const double mean = sum / nn;
    const double var = std::max(0.0, (sum_sq - nn * mean * mean) / (nn - 1.0));
    return EstimatorResult{.estimate = mean, .std_error = std::sqrt(var / nn), .n = n};
}

}  // namespace

EstimatorResult estimate_correlation(std::span<const EventRecord> events) {
    if (events.size() < 2) {
        throw std::invalid_argument("correlation estimate needs at least two events");
    }
    double sum = 0.0;
    for (const EventRecord &e : events) {
        sum += e.outcome_a == e.outcome_b ? 1.0 : -1.0;
    }
    // s_i^2 == 1 for every event.
    return mean_with_stderr(sum, static_cast<double>(events.size()), events.size());
}

EstimatorResult estimate_single(std::span<const EventRecord> events, Party party, Port port) {
    if (events.size() < 2) {
        throw std::invalid_argument("single-detector estimate needs at least two events");
    }
    double hits = 0.0;
    for (const EventRecord &e : events) {
        const Port seen = party == Party::A ? e.outcome_a : e.outcome_b;
        hits += seen == port ? 1.0 : 0.0;
    }
    return mean_with_stderr(hits, hits, events.size());
}

BellResult bell_experiment(const ChshSettings &s, const Visibility &vis, std::size_t n_per_setting,
                           std::uint64_t seed, unsigned threads) {
    if (n_per_setting < 2) {
        throw std::invalid_argument("bell experiment needs at least two samples per setting");
    }
    const auto pairs = chsh_setting_pairs(s);
    BellResult out;
    parallel_for(4, threads, [&](std::size_t k) {
        const auto events = sample_events(rto_joint_distribution(pairs[k], vis), n_per_setting, sub_seed(seed, k));
        out.terms[k] = estimate_correlation(events);
    });
    const auto &e = out.terms;
    out.s.estimate = e[0].estimate + e[1].estimate + e[2].estimate - e[3].estimate;
    double var = 0.0;
    for (const auto &t : e) {
        var += t.std_error * t.std_error;
    }
    out.s.std_error = std::sqrt(var);
    out.s.n = 4 * n_per_setting;
    return out;
}

std::vector<EstimatorResult> sample_sweep(std::span<const double> grid, const Visibility &vis, std::size_t n,
                                          std::uint64_t seed, unsigned threads) {
    if (grid.empty()) {
        throw std::invalid_argument("sweep grid must not be empty");
    }
    std::vector<EstimatorResult> out(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t k) {
        const auto events = sample_events(rto_joint_distribution(PhaseSettings(grid[k], 0.0), vis), n, sub_seed(seed, k));
        out[k] = estimate_correlation(events);
    });
    return out;
}

}  // namespace rto
