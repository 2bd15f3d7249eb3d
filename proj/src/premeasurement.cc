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

#include "rto/premeasurement.h"

#include <cmath>
#include <stdexcept>

#include "rto/coherence.h"
#include "rto/optics.h"

namespace rto {

Space detector_space() { return Space{Factor{{"ready", "D1", "D2"}}}; }

Space system_detector_space() { return path_space(Party::A) * detector_space(); }

Operator detector_coupling() {
    const Space space = system_detector_space();
    CMatrix u = CMatrix::Zero(6, 6);
    // Block for A = A{i}: permutation swapping ready and D{i}, fixing the rest.
    for (int a = 0; a < 2; ++a) {
        const int target = a + 1;
        for (int d = 0; d < 3; ++d) {
            int image = d;
            if (d == 0) {
                image = target;
            } else if (d == target) {
                image = 0;
            }
            u(a * 3 + image, a * 3 + d) = 1.0;
        }
    }
    return Operator(space, space, std::move(u));
}

StateVector premeasure(double theta) {
    const StateVector ready = StateVector::basis(detector_space(), {"ready"});
    return apply(detector_coupling(), tensor(superposed_state(theta), ready));
}

StateVector premeasurement_reference_state() {
    const Space space = system_detector_space();
    CVector amps = CVector::Zero(6);
    const double h = 1.0 / std::sqrt(2.0);
    amps[static_cast<Eigen::Index>(space.index_of({"A1", "D1"}))] = h;
    amps[static_cast<Eigen::Index>(space.index_of({"A2", "D2"}))] = h;
    return StateVector(space, std::move(amps));
}

CorrelationReport correlation_report(const StateVector &psi) {
    if (!(psi.space() == system_detector_space())) {
        throw std::invalid_argument("correlation report expects space " + system_detector_space().str() +
                                    ", got " + psi.space().str());
    }
    CorrelationReport r;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t d = 0; d < 3; ++d) {
            r.joint_probs[a][d] = std::norm(psi[a * 3 + d]);
        }
    }
    for (std::size_t a = 0; a < 2; ++a) {
        const double pa = r.joint_probs[a][0] + r.joint_probs[a][1] + r.joint_probs[a][2];
        for (std::size_t d = 0; d < 3; ++d) {
            if (pa > 0.0) {
                r.conditional_probs[a][d] = r.joint_probs[a][d] / pa;
            }
        }
    }

    const DensityMatrix rho = density_of(psi);
    r.l1_coherence_a = l1_coherence(partial_trace(rho, 0));
    r.l1_coherence_d = l1_coherence(partial_trace(rho, 1));
    r.correlation_coherence = rho(0 * 3 + 1, 1 * 3 + 2);

    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t d = 0; d < 3; ++d) {
            const bool correlated_dyad = (d == a + 1);
            if (!correlated_dyad) {
                r.both_clicked_prob += r.joint_probs[a][d];
            }
            // "A in Ai iff D in Di" for i = 1, 2.
            bool holds = true;
            for (std::size_t i = 0; i < 2; ++i) {
                holds = holds && ((a == i) == (d == i + 1));
            }
            if (!holds) {
                r.iff_violation_prob += r.joint_probs[a][d];
            }
        }
    }
    return r;
}

}  // namespace rto
