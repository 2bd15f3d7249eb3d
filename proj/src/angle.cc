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

#include "rto/angle.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rto {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

// Whole-string decimal; false on any trailing garbage.
bool parse_number(std::string_view s, double &out) {
    if (s.empty()) {
        return false;
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

[[noreturn]] void bad_angle(std::string_view text) {
    throw std::invalid_argument("invalid angle '" + std::string(text) + "'");
}

}  // namespace

double parse_angle(std::string_view text) {
    const std::string_view s = trim(text);
    double value = 0.0;
    if (parse_number(s, value)) {
        return value;
    }

    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) {
        bad_angle(text);
    }

    // Coefficient before "pi": "", "-", "+", "3", "3*", "-0.5*".
    std::string_view coef = trim(s.substr(0, pi_pos));
    if (!coef.empty() && coef.back() == '*') {
        coef = trim(coef.substr(0, coef.size() - 1));
        if (coef.empty() || coef == "-" || coef == "+") {
            bad_angle(text);
        }
    }
    double scale = 1.0;
    if (coef == "-") {
        scale = -1.0;
    } else if (!coef.empty() && coef != "+" && !parse_number(coef, scale)) {
        bad_angle(text);
    }

    // Optional divisor after "pi": "" or "/4".
    std::string_view rest = trim(s.substr(pi_pos + 2));
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            bad_angle(text);
        }
        if (!parse_number(trim(rest.substr(1)), divisor) || divisor == 0.0) {
            bad_angle(text);
        }
    }
    return scale * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_angle(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

}  // namespace rto
