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

// Von Neumann pre-measurement: a two-state system A coupled to the quantum
// component of a detector D with basis {ready, D1, D2}.

#ifndef RTO_PREMEASUREMENT_H
#define RTO_PREMEASUREMENT_H

#include <array>
#include <optional>

#include "rto/linalg.h"

namespace rto {

/// [ready, D1, D2]; ready is index 0.
Space detector_space();
/// [A1,A2]x[ready,D1,D2].
Space system_detector_space();

/// 6x6 unitary with U|Ai>|ready> = |Ai>|Di>. Completed off the ready
/// subspace by controlled swaps: on |A1> swap ready<->D1, on |A2> swap
/// ready<->D2.
Operator detector_coupling();

/// detector_coupling applied to superposed_state(theta) x |ready>.
StateVector premeasure(double theta);

/// (|A1>|D1> + |A2>|D2>)/sqrt(2) written down directly.
StateVector premeasurement_reference_state();

struct CorrelationReport {
    /// [a][d] with a in {A1, A2}, d in {ready, D1, D2}.
    std::array<std::array<double, 3>, 2> joint_probs{};
    /// P(d | a); empty when P(a) == 0.
    std::array<std::array<std::optional<double>, 3>, 2> conditional_probs{};
    double l1_coherence_a = 0.0;
    double l1_coherence_d = 0.0;
    /// <A1 D1| rho |A2 D2>.
    Amplitude correlation_coherence{0.0, 0.0};
    /// Weight outside the two correlated dyads (A1,D1) and (A2,D2).
    double both_clicked_prob = 0.0;
    /// Weight on outcomes where "A is in Ai iff D is in Di" fails for some i.
    double iff_violation_prob = 0.0;
};

/// Throws std::invalid_argument unless psi lives on system_detector_space().
/// Unnormalized input cannot reach this function: StateVector rejects it.
CorrelationReport correlation_report(const StateVector &psi);

}  // namespace rto

#endif
