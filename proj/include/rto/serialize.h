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

#ifndef RTO_SERIALIZE_H
#define RTO_SERIALIZE_H

#include <string>

#include "json.hpp"
#include "rto/linalg.h"

namespace rto {

using Json = nlohmann::ordered_json;

/// Rounds to 9 significant digits so that emitted numbers are stable text.
double round9(double x);
/// printf("%.9g") equivalent used by every CSV/JSON writer in the CLI.
std::string fmt9(double x);

/// [[labels of factor 0], [labels of factor 1], ...]
Json to_json(const Space &space);
Space space_from_json(const Json &j);

/// {"space": [...], "amplitudes": [[re, im], ...]}
Json to_json(const StateVector &psi);
StateVector state_from_json(const Json &j);

/// {"space": [...], "entries": [[[re, im], ...], ...]} (row-major)
Json to_json(const DensityMatrix &rho);

}  // namespace rto

#endif
