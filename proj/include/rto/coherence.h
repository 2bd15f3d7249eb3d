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

#ifndef RTO_COHERENCE_H
#define RTO_COHERENCE_H

#include <array>
#include <span>
#include <vector>

#include "rto/linalg.h"
#include "rto/optics.h"

namespace rto {

/// Single-detector probabilities: row sums (A) and column sums (B) of a
/// joint table.
struct Singles {
    double a_plus = 0.0;
    double a_minus = 0.0;
    double b_plus = 0.0;
    double b_minus = 0.0;
};

Singles marginals(const JointDistribution &j);

/// E = p(++) + p(--) - p(+-) - p(-+).
double correlation(const JointDistribution &j);

/// Exact correlation sweep over the nonlocal phase difference. Grid point
/// `delta` is evaluated at settings (phi_a, phi_b) = (delta, 0).
struct SweepResult {
    std::vector<double> delta_grid;
    std::vector<double> correlations;
    std::vector<Singles> singles;
    /// Full joint table per grid point ([a][b], Plus = 0), so both the
    /// correlation and the raw coincidence-probability readings are available.
    std::vector<std::array<std::array<double, 2>, 2>> joint;
    Visibility visibility_used{1.0};
};

/// Throws std::invalid_argument on an empty grid. Points may be evaluated on
/// `threads` workers; output is ordered by grid index and identical to a
/// sequential run.
SweepResult sweep_correlation(std::span<const double> grid, const Visibility &vis, unsigned threads = 1);

/// (max - min) / (max + min); 0 when max + min == 0. Needs at least two values.
double fringe_visibility(std::span<const double> values);

struct ChshSettings {
    double a = 0.0;
    double a_prime = 0.0;
    double b = 0.0;
    double b_prime = 0.0;
};

/// a = 0, a' = pi/2, b = pi/4, b' = -pi/4: S = 2*sqrt(2)*v.
ChshSettings optimal_chsh_settings();

/// The four correlations in CHSH order: E(a,b), E(a,b'), E(a',b), E(a',b').
std::array<PhaseSettings, 4> chsh_setting_pairs(const ChshSettings &s);

/// S = E(a,b) + E(a,b') + E(a',b) - E(a',b').
double chsh(const ChshSettings &s, const Visibility &vis);

/// Sum of moduli of the off-diagonal entries in the declared basis.
double l1_coherence(const DensityMatrix &rho);

/// Largest |P(A+) - 0.5| or |P(B+) - 0.5| with phi_a fixed and phi_b running
/// over the grid. Throws std::invalid_argument on an empty grid.
double no_signaling_check(double phi_a, std::span<const double> phi_b_grid, const Visibility &vis);

/// Same check with phi_b fixed and phi_a running over the grid.
double no_signaling_check_b(double phi_b, std::span<const double> phi_a_grid, const Visibility &vis);

}  // namespace rto

#endif
