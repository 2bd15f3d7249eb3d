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

#ifndef RTO_CLI_H
#define RTO_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rto::cli {

/// Bad flags or values. Exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Output could not be written. Exit status 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed flags of one invocation. Angles stay as text until the command
/// runs so that "pi/4" style expressions are parsed in one place.
struct RunConfig {
    std::string subcommand;

    // sweep / marginals
    std::string delta_min = "0";
    std::string delta_max = "pi";
    int steps = 33;
    std::optional<std::string> mc;  // "n,seed"

    // bell
    bool optimal = false;
    std::optional<std::string> angles;  // "a,a',b,b'"

    // sample
    std::string phi_a = "0";
    std::string phi_b = "0";

    // premeasure
    std::string theta = "0";

    double visibility = 1.0;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 42;
    std::string format = "csv";
    std::string output;      // empty: standard output
    std::string dump_state;  // empty: no dump
    unsigned threads = 0;    // 0: hardware concurrency
};

void cmd_sweep(const RunConfig &config, std::ostream &out, std::ostream &err);
void cmd_marginals(const RunConfig &config, std::ostream &out, std::ostream &err);
void cmd_bell(const RunConfig &config, std::ostream &out, std::ostream &err);
void cmd_premeasure(const RunConfig &config, std::ostream &out, std::ostream &err);
void cmd_sample(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Full command line including the program name. Returns the exit status;
/// failures print a single "rtosim: error: ..." line to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rto::cli

#endif
