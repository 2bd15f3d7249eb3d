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

// Finite-statistics coincidence counting on top of the exact joint
// distributions.
//
// Random numbers come from splitmix64 so that any other implementation can
// reproduce an event stream exactly:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output z ^ (z >> 31)
//
// A uniform double in [0, 1) is (output >> 11) * 2^-53. Independent
// sub-streams (CHSH settings, sweep grid points) are seeded with
// splitmix64(seed + k), i.e. the first output of a generator whose state
// starts at seed + k, for k = 0, 1, 2, ...

#ifndef RTO_MONTECARLO_H
#define RTO_MONTECARLO_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rto/coherence.h"
#include "rto/optics.h"

namespace rto {

/// First output of a splitmix64 generator whose state starts at `x`.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the k-th independent sub-stream derived from `seed`.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t k) { return splitmix64(seed + k); }

class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Top 53 bits scaled into [0, 1).
    double uniform();

   private:
    std::uint64_t state_;
};

struct EventRecord {
    std::uint64_t trial = 0;
    PhaseSettings settings{0.0, 0.0};
    Port outcome_a = Port::Plus;
    Port outcome_b = Port::Plus;
};

struct EstimatorResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
};

/// n i.i.d. coincidences drawn by inverse CDF over the outcomes in the order
/// (++, +-, -+, --), one uniform per event. Trial indices run 0..n-1.
/// Throws std::invalid_argument when n == 0.
std::vector<EventRecord> sample_events(const JointDistribution &j, std::size_t n, std::uint64_t seed);

/// Mean of s_i (+1 for matching outcomes, -1 otherwise) with
/// stderr = sample standard deviation / sqrt(n). Needs n >= 2.
EstimatorResult estimate_correlation(std::span<const EventRecord> events);

/// Fraction of events with the given party registering `port`, with the same
/// stderr convention. Needs n >= 2.
EstimatorResult estimate_single(std::span<const EventRecord> events, Party party, Port port = Port::Plus);

struct BellResult {
    EstimatorResult s;
    /// E estimates in CHSH order E(a,b), E(a,b'), E(a',b), E(a',b').
    std::array<EstimatorResult, 4> terms;
};

/// Samples each CHSH setting with sub-seed k = 0..3 and combines
/// S = E1 + E2 + E3 - E4, stderr = sqrt(sum of squared term stderrs). Settings may run on
/// `threads` workers without changing the result.
BellResult bell_experiment(const ChshSettings &s, const Visibility &vis, std::size_t n_per_setting,
                           std::uint64_t seed, unsigned threads = 1);

/// Correlation estimate at each grid point delta (settings (delta, 0)), grid
/// point k using sub-seed k.
std::vector<EstimatorResult> sample_sweep(std::span<const double> grid, const Visibility &vis, std::size_t n,
                                          std::uint64_t seed, unsigned threads = 1);

}  // namespace rto

#endif
