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

// States and optical elements of the two-photon momentum-entangled
// interferometer: a source emitting the biphoton on paths A1/A2 and B1/B2,
// one variable phase shifter per party, and a 50/50 beam splitter per party
// recombining its two paths onto detector ports +/-.

#ifndef RTO_OPTICS_H
#define RTO_OPTICS_H

#include <array>
#include <numbers>
#include <string>

#include "rto/linalg.h"

namespace rto {

enum class Party { A, B };
enum class Port { Plus, Minus };

/// Either an interferometer arm (path 1 or 2) or a detector output port.
class ModeLabel {
   public:
    static ModeLabel path(Party party, int index);
    static ModeLabel port(Party party, Port port);

    Party party() const { return party_; }
    bool is_path() const { return is_path_; }
    /// 1 or 2; only meaningful for path modes.
    int path_index() const { return index_; }
    /// Only meaningful for port modes.
    Port port_value() const { return index_ == 0 ? Port::Plus : Port::Minus; }

    /// "A1", "B2", "A+", "B-".
    std::string str() const;

   private:
    ModeLabel(Party party, bool is_path, int index) : party_(party), is_path_(is_path), index_(index) {}
    Party party_;
    bool is_path_;
    int index_;
};

/// Wraps any real angle into [0, 2*pi).
double normalize_angle(double radians);

class PhaseSettings {
   public:
    PhaseSettings(double phi_a, double phi_b)
        : phi_a_(normalize_angle(phi_a)), phi_b_(normalize_angle(phi_b)) {}

    double phi_a() const { return phi_a_; }
    double phi_b() const { return phi_b_; }
    /// Nonlocal phase difference phi_a - phi_b.
    double delta() const { return phi_a_ - phi_b_; }

   private:
    double phi_a_;
    double phi_b_;
};

/// Interference visibility in [0, 1]; throws std::invalid_argument otherwise.
class Visibility {
   public:
    explicit Visibility(double v);
    double value() const { return v_; }

   private:
    double v_;
};

/// Probability table over (A-port, B-port) detector outcomes.
class JointDistribution {
   public:
    /// probs indexed [a][b] with Plus = 0, Minus = 1. Each entry must lie in
    /// [0, 1] and the table must sum to 1 within kExactTol.
    JointDistribution(PhaseSettings settings, std::array<std::array<double, 2>, 2> probs);

    static JointDistribution uniform(PhaseSettings settings = {0.0, 0.0});

    const PhaseSettings &settings() const { return settings_; }
    double p(Port a, Port b) const { return probs_[idx(a)][idx(b)]; }
    const std::array<std::array<double, 2>, 2> &table() const { return probs_; }

    static constexpr std::size_t idx(Port p) { return p == Port::Plus ? 0 : 1; }

   private:
    PhaseSettings settings_;
    std::array<std::array<double, 2>, 2> probs_;
};

/// Path space of one party, [X1, X2].
Space path_space(Party party);
/// Detector port space of one party, [X+, X-].
Space port_space(Party party);

/// (|A1>|B1> + |A2>|B2>)/sqrt(2) on [A1,A2]x[B1,B2].
StateVector biphoton_state();

/// (|A1> + e^{i theta}|A2>)/sqrt(2) on [A1,A2].
StateVector superposed_state(double theta);

/// Diagonal unitary on the mode's party path space applying e^{i phi} to that
/// path. Throws std::invalid_argument for output-port modes.
Operator phase_shifter(const ModeLabel &mode, double phi);

/// Symmetric 50/50 splitter from the party's paths to its ports:
/// |1> -> (|+> + i|->)/sqrt(2), |2> -> (i|+> + |->)/sqrt(2).
Operator beam_splitter(Party party);

/// Complete two-party circuit as one 4x4 unitary from [A1,A2]x[B1,B2] to
/// [A+,A-]x[B+,B-]: phi_a on path A2, phi_b on path B1, then both splitters.
Operator rto_circuit(const PhaseSettings &settings);

/// Detector outcome registered when a B photon leaves the B splitter at
/// `port`. B's detectors are wired crosswise so that equal phases give
/// perfectly matching outcomes (E = +1).
constexpr Port b_detector_for_port(Port port) { return port == Port::Plus ? Port::Minus : Port::Plus; }

/// Exact Born probabilities of the circuit applied to the biphoton, mixed with
/// the flat distribution: p = v * p_ideal + (1 - v) / 4.
JointDistribution rto_joint_distribution(const PhaseSettings &settings, const Visibility &vis);

}  // namespace rto

#endif
