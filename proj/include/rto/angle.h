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

#ifndef RTO_ANGLE_H
#define RTO_ANGLE_H

#include <string_view>
#include <vector>

namespace rto {

/// Parses an angle in radians. Accepts plain decimals ("0.785", "-1e-3") and
/// multiples of pi: "pi", "-pi", "pi/4", "3pi/4", "3*pi/4", "0.5pi", "2*pi".
/// Throws std::invalid_argument on anything else.
double parse_angle(std::string_view text);

/// Comma-separated list of angles, e.g. "0,pi/2,pi/4,-pi/4".
std::vector<double> parse_angle_list(std::string_view text);

}  // namespace rto

#endif
