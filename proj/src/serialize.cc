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

#include "rto/serialize.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <fmt/format.h>

namespace rto {

namespace {

// States keep full round-trip precision; 9 digits would break normalization
// on reload.
Json complex_json(Amplitude z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

std::string fmt9(double x) {
    // Avoid printing "-0".
    if (x == 0.0) {
        x = 0.0;
    }
    return fmt::format("{:.9g}", x);
}

double round9(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    return std::strtod(fmt9(x).c_str(), nullptr);
}

Json to_json(const Space &space) {
    Json out = Json::array();
    for (const auto &f : space.factors()) {
        out.push_back(f.labels);
    }
    return out;
}

Space space_from_json(const Json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("space must be a JSON array of label arrays");
    }
    std::vector<Factor> factors;
    for (const auto &f : j) {
        factors.push_back(Factor{f.get<std::vector<std::string>>()});
    }
    return Space(std::move(factors));
}

Json to_json(const StateVector &psi) {
    Json amps = Json::array();
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        amps.push_back(complex_json(psi[i]));
    }
    return Json{{"space", to_json(psi.space())}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const Json &j) {
    Space space = space_from_json(j.at("space"));
    const Json &amps = j.at("amplitudes");
    CVector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const auto &z = amps[i];
        if (!z.is_array() || z.size() != 2) {
            throw std::invalid_argument("amplitude must be [re, im]");
        }
        v[static_cast<Eigen::Index>(i)] = Amplitude(z[0].get<double>(), z[1].get<double>());
    }
    return StateVector(std::move(space), std::move(v));
}

Json to_json(const DensityMatrix &rho) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            row.push_back(complex_json(rho(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"space", to_json(rho.space())}, {"entries", std::move(rows)}};
}

}  // namespace rto
