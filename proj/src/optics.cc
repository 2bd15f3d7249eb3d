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

#include "rto/optics.h"

#include <cmath>
#include <stdexcept>

namespace rto {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Amplitude kI(0.0, 1.0);

std::string party_name(Party p) { return p == Party::A ? "A" : "B"; }

}  // namespace

ModeLabel ModeLabel::path(Party party, int index) {
    if (index != 1 && index != 2) {
        throw std::invalid_argument("path index must be 1 or 2");
    }
    return ModeLabel(party, true, index);
}

ModeLabel ModeLabel::port(Party party, Port port) {
    return ModeLabel(party, false, port == Port::Plus ? 0 : 1);
}

std::string ModeLabel::str() const {
    if (is_path_) {
        return party_name(party_) + std::to_string(index_);
    }
    return party_name(party_) + (index_ == 0 ? "+" : "-");
}

double normalize_angle(double radians) {
    if (!std::isfinite(radians)) {
        throw std::invalid_argument("angle must be finite");
    }
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

Visibility::Visibility(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1]");
    }
}

JointDistribution::JointDistribution(PhaseSettings settings, std::array<std::array<double, 2>, 2> probs)
    : settings_(settings), probs_(probs) {
    double total = 0.0;
    for (const auto &row : probs_) {
        for (double p : row) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument("joint probability outside [0, 1]");
            }
            total += p;
        }
    }
    if (std::abs(total - 1.0) > kExactTol) {
        throw std::invalid_argument("joint distribution does not sum to 1");
    }
}

JointDistribution JointDistribution::uniform(PhaseSettings settings) {
    return JointDistribution(settings, {{{0.25, 0.25}, {0.25, 0.25}}});
}

Space path_space(Party party) {
    const std::string n = party_name(party);
    return Space{Factor{{n + "1", n + "2"}}};
}

Space port_space(Party party) {
    const std::string n = party_name(party);
    return Space{Factor{{n + "+", n + "-"}}};
}

StateVector biphoton_state() {
    CVector amps(4);
    amps << kInvSqrt2, 0.0, 0.0, kInvSqrt2;
    return StateVector(path_space(Party::A) * path_space(Party::B), std::move(amps));
}

StateVector superposed_state(double theta) {
    CVector amps(2);
    amps << kInvSqrt2, std::polar(kInvSqrt2, theta);
    return StateVector(path_space(Party::A), std::move(amps));
}

Operator phase_shifter(const ModeLabel &mode, double phi) {
    if (!mode.is_path()) {
        throw std::invalid_argument("phase shifter must act on a path mode, not port " + mode.str());
    }
    CMatrix m = CMatrix::Identity(2, 2);
    const Eigen::Index k = mode.path_index() - 1;
    m(k, k) = std::polar(1.0, phi);
    return Operator(path_space(mode.party()), path_space(mode.party()), std::move(m));
}

Operator beam_splitter(Party party) {
    // Columns are inputs (path 1, path 2); rows are outputs (+, -).
    CMatrix m(2, 2);
    m << kInvSqrt2, kI * kInvSqrt2,
         kI * kInvSqrt2, kInvSqrt2;
    return Operator(path_space(party), port_space(party), std::move(m));
}

Operator rto_circuit(const PhaseSettings &settings) {
    const Operator shifters = tensor(phase_shifter(ModeLabel::path(Party::A, 2), settings.phi_a()),
                                     phase_shifter(ModeLabel::path(Party::B, 1), settings.phi_b()));
    const Operator splitters = tensor(beam_splitter(Party::A), beam_splitter(Party::B));
    return compose(splitters, shifters);
}

JointDistribution rto_joint_distribution(const PhaseSettings &settings, const Visibility &vis) {
    const StateVector out = apply(rto_circuit(settings), biphoton_state());
    const double v = vis.value();
    std::array<std::array<double, 2>, 2> probs{};
    for (Port pa : {Port::Plus, Port::Minus}) {
        for (Port pb : {Port::Plus, Port::Minus}) {
            const double ideal = std::norm(out[2 * JointDistribution::idx(pa) + JointDistribution::idx(pb)]);
            probs[JointDistribution::idx(pa)][JointDistribution::idx(b_detector_for_port(pb))] =
                v * ideal + (1.0 - v) * 0.25;
        }
    }
    return JointDistribution(settings, probs);
}

}  // namespace rto
