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

#include "rto/cli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string_view>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "rto/angle.h"
#include "rto/coherence.h"
#include "rto/montecarlo.h"
#include "rto/optics.h"
#include "rto/parallel.h"
#include "rto/premeasurement.h"
#include "rto/serialize.h"

namespace rto::cli {

namespace {

double angle_arg(const std::string &text, const char *flag) {
    try {
        return parse_angle(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

Visibility visibility_arg(double v) {
    try {
        return Visibility(v);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--visibility: ") + e.what());
    }
}

std::uint64_t parse_u64(std::string_view s, const char *what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + std::string(s) + "'");
    }
    return v;
}

std::vector<double> delta_grid(const RunConfig &c) {
    if (c.steps < 2) {
        throw UsageError("--steps must be at least 2");
    }
    const double lo = angle_arg(c.delta_min, "--delta-min");
    const double hi = angle_arg(c.delta_max, "--delta-max");
    if (hi < lo) {
        throw UsageError("--delta-max must not be below --delta-min");
    }
    std::vector<double> grid(static_cast<std::size_t>(c.steps));
    for (std::size_t k = 0; k < grid.size(); ++k) {
        grid[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(c.steps - 1);
    }
    grid.back() = hi;
    return grid;
}

// Runs `write` against the configured destination.
template <typename Write>
void emit(const std::string &path, std::ostream &out, Write &&write) {
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write(file);
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

void dump_json(const std::string &path, const Json &j) {
    if (path.empty()) {
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << j.dump(2) << "\n";
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
}

const char *port_sign(Port p) { return p == Port::Plus ? "+" : "-"; }

}  // namespace

void cmd_sweep(const RunConfig &c, std::ostream &out, std::ostream &) {
    if (c.format != "csv" && c.format != "json") {
        throw UsageError("sweep supports --format csv or json");
    }
    const std::vector<double> grid = delta_grid(c);
    const Visibility vis = visibility_arg(c.visibility);
    const SweepResult exact = sweep_correlation(grid, vis, c.threads);

    std::vector<EstimatorResult> mc;
    std::size_t mc_n = 0;
    std::uint64_t mc_seed = 0;
    if (c.mc) {
        const auto comma = c.mc->find(',');
        if (comma == std::string::npos) {
            throw UsageError("--mc expects n,seed");
        }
        mc_n = parse_u64(std::string_view(*c.mc).substr(0, comma), "--mc n");
        mc_seed = parse_u64(std::string_view(*c.mc).substr(comma + 1), "--mc seed");
        if (mc_n < 2) {
            throw UsageError("--mc n must be at least 2");
        }
        mc = sample_sweep(grid, vis, mc_n, mc_seed, c.threads);
    }

    emit(c.output, out, [&](std::ostream &os) {
        if (c.format == "csv") {
            os << "delta,E_exact,p_pp,p_pm,p_mp,p_mm,pA_plus,pB_plus";
            if (c.mc) {
                os << ",E_hat,stderr";
            }
            os << "\n";
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const auto &t = exact.joint[k];
                os << fmt9(grid[k]) << ',' << fmt9(exact.correlations[k]) << ',' << fmt9(t[0][0]) << ','
                   << fmt9(t[0][1]) << ',' << fmt9(t[1][0]) << ',' << fmt9(t[1][1]) << ','
                   << fmt9(exact.singles[k].a_plus) << ',' << fmt9(exact.singles[k].b_plus);
                if (c.mc) {
                    os << ',' << fmt9(mc[k].estimate) << ',' << fmt9(mc[k].std_error);
                }
                os << "\n";
            }
            return;
        }
        Json points = Json::array();
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const auto &t = exact.joint[k];
            Json p{{"delta", round9(grid[k])},
                   {"E_exact", round9(exact.correlations[k])},
                   {"p_pp", round9(t[0][0])},
                   {"p_pm", round9(t[0][1])},
                   {"p_mp", round9(t[1][0])},
                   {"p_mm", round9(t[1][1])},
                   {"pA_plus", round9(exact.singles[k].a_plus)},
                   {"pB_plus", round9(exact.singles[k].b_plus)}};
            if (c.mc) {
                p["E_hat"] = round9(mc[k].estimate);
                p["stderr"] = round9(mc[k].std_error);
            }
            points.push_back(std::move(p));
        }
        Json doc{{"visibility", round9(vis.value())}, {"points", std::move(points)}};
        if (c.mc) {
            doc["mc_samples"] = mc_n;
            doc["mc_seed"] = mc_seed;
        }
        os << doc.dump(2) << "\n";
    });
}

void cmd_marginals(const RunConfig &c, std::ostream &out, std::ostream &) {
    if (c.format != "csv" && c.format != "json") {
        throw UsageError("marginals supports --format csv or json");
    }
    const std::vector<double> grid = delta_grid(c);
    const Visibility vis = visibility_arg(c.visibility);
    const SweepResult exact = sweep_correlation(grid, vis, c.threads);
    emit(c.output, out, [&](std::ostream &os) {
        if (c.format == "csv") {
            os << "delta,pA_plus,pA_minus,pB_plus,pB_minus\n";
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const Singles &s = exact.singles[k];
                os << fmt9(grid[k]) << ',' << fmt9(s.a_plus) << ',' << fmt9(s.a_minus) << ',' << fmt9(s.b_plus)
                   << ',' << fmt9(s.b_minus) << "\n";
            }
            return;
        }
        Json points = Json::array();
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const Singles &s = exact.singles[k];
            points.push_back(Json{{"delta", round9(grid[k])},
                                  {"pA_plus", round9(s.a_plus)},
                                  {"pA_minus", round9(s.a_minus)},
                                  {"pB_plus", round9(s.b_plus)},
                                  {"pB_minus", round9(s.b_minus)}});
        }
        os << Json{{"visibility", round9(vis.value())}, {"points", std::move(points)}}.dump(2) << "\n";
    });
}

void cmd_bell(const RunConfig &c, std::ostream &out, std::ostream &) {
    ChshSettings s;
    if (c.optimal) {
        s = optimal_chsh_settings();
    } else if (c.angles) {
        std::vector<double> a;
        try {
            a = parse_angle_list(*c.angles);
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--angles: ") + e.what());
        }
        if (a.size() != 4) {
            throw UsageError("--angles expects four values a,a',b,b'");
        }
        s = ChshSettings{.a = a[0], .a_prime = a[1], .b = a[2], .b_prime = a[3]};
    } else {
        throw UsageError("bell needs --optimal or --angles a,a',b,b'");
    }
    const Visibility vis = visibility_arg(c.visibility);
    const std::size_t n = c.samples.value_or(100000);
    if (n < 2) {
        throw UsageError("--samples must be at least 2 for bell");
    }
    const double s_exact = chsh(s, vis);
    const BellResult mc = bell_experiment(s, vis, n, c.seed, c.threads);
    const bool violation = mc.s.estimate - 2.0 > 3.0 * mc.s.std_error;

    Json doc{{"angles",
              Json{{"a", round9(s.a)}, {"a_prime", round9(s.a_prime)}, {"b", round9(s.b)}, {"b_prime", round9(s.b_prime)}}},
             {"visibility", round9(vis.value())},
             {"S_exact", round9(s_exact)},
             {"S_hat", round9(mc.s.estimate)},
             {"stderr", round9(mc.s.std_error)},
             {"n_per_setting", n},
             {"seed", c.seed},
             {"violation", violation}};
    emit(c.output, out, [&](std::ostream &os) { os << doc.dump(2) << "\n"; });
}

namespace {

Json report_json(double theta, const CorrelationReport &r) {
    static const char *a_names[] = {"A1", "A2"};
    static const char *d_names[] = {"ready", "D1", "D2"};
    Json joint = Json::object();
    Json cond = Json::object();
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t d = 0; d < 3; ++d) {
            joint[std::string(a_names[a]) + "," + d_names[d]] = round9(r.joint_probs[a][d]);
            const auto &p = r.conditional_probs[a][d];
            cond[std::string(d_names[d]) + "|" + a_names[a]] = p ? Json(round9(*p)) : Json(nullptr);
        }
    }
    const Amplitude cc = r.correlation_coherence;
    const double cc_phase = std::abs(cc) > 0.0 ? std::arg(cc) : 0.0;

    const double tol = kExactTol;
    bool unit_conditionals = true;
    for (std::size_t i = 0; i < 2; ++i) {
        const auto &p = r.conditional_probs[i][i + 1];
        unit_conditionals = unit_conditionals && p && std::abs(*p - 1.0) < tol;
    }
    const bool biconditional = r.both_clicked_prob < tol && r.iff_violation_prob < tol && unit_conditionals;
    // Joint existence of both dyads in one trial would put weight on
    // registrations outside a single correlated pair; none is observed.
    const bool joint_existence = r.both_clicked_prob > tol;

    return Json{
        {"theta", round9(theta)},
        {"joint_probs", std::move(joint)},
        {"conditional_probs", std::move(cond)},
        {"subsystem_coherence", Json{{"A", round9(r.l1_coherence_a)}, {"D", round9(r.l1_coherence_d)}}},
        {"correlation_coherence",
         Json{{"re", round9(cc.real())}, {"im", round9(cc.imag())}, {"modulus", round9(std::abs(cc))},
              {"phase", round9(cc_phase)}}},
        {"both_clicked_prob", round9(r.both_clicked_prob)},
        {"iff_violation_prob", round9(r.iff_violation_prob)},
        {"verdict",
         Json{{"joint_existence_reading", joint_existence ? "consistent" : "inconsistent"},
              {"biconditional_reading", biconditional ? "consistent" : "inconsistent"}}},
    };
}

void print_verdict_table(const CorrelationReport &r, std::ostream &os) {
    const auto row = [&](std::string_view what, std::string_view joint, std::string_view iff, const std::string &seen) {
        os << fmt::format("{:<34} {:<22} {:<22} {}\n", what, joint, iff, seen);
    };
    row("quantity", "joint-existence", "biconditional", "simulated");
    row("P(outside correlated dyads)", "> 0 (both registered)", "0", fmt9(r.both_clicked_prob));
    row("P(D1|A1), P(D2|A2)", "-", "1, 1",
        fmt9(r.conditional_probs[0][1].value_or(NAN)) + ", " + fmt9(r.conditional_probs[1][2].value_or(NAN)));
    row("l1 coherence of A, D", "> 0 (smeared)", "0, 0", fmt9(r.l1_coherence_a) + ", " + fmt9(r.l1_coherence_d));
    row("|<A1 D1|rho|A2 D2>|", "-", "0.5", fmt9(std::abs(r.correlation_coherence)));
}

}  // namespace

void cmd_premeasure(const RunConfig &c, std::ostream &out, std::ostream &err) {
    const double theta = angle_arg(c.theta, "--theta");
    const StateVector psi = premeasure(theta);
    const CorrelationReport r = correlation_report(psi);
    if (!c.dump_state.empty()) {
        const DensityMatrix rho = density_of(psi);
        dump_json(c.dump_state, Json{{"state", to_json(psi)},
                                     {"rho_A", to_json(partial_trace(rho, 0))},
                                     {"rho_D", to_json(partial_trace(rho, 1))}});
    }
    emit(c.output, out, [&](std::ostream &os) { os << report_json(theta, r).dump(2) << "\n"; });
    print_verdict_table(r, err);
}

void cmd_sample(const RunConfig &c, std::ostream &out, std::ostream &err) {
    const std::size_t n = c.samples.value_or(1000);
    if (n < 1) {
        throw UsageError("--samples must be at least 1");
    }
    const PhaseSettings settings(angle_arg(c.phi_a, "--phi-a"), angle_arg(c.phi_b, "--phi-b"));
    const Visibility vis = visibility_arg(c.visibility);
    if (!c.dump_state.empty()) {
        dump_json(c.dump_state, to_json(apply(rto_circuit(settings), biphoton_state())));
    }
    const std::vector<EventRecord> events = sample_events(rto_joint_distribution(settings, vis), n, c.seed);

    // Lines are formatted in fixed-size chunks, possibly concurrently, and
    // written in trial order.
    constexpr std::size_t kChunk = 1 << 14;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<std::string> text(chunks);
    const std::string phi_a = fmt9(settings.phi_a());
    const std::string phi_b = fmt9(settings.phi_b());
    parallel_for(chunks, c.threads, [&](std::size_t k) {
        fmt::memory_buffer buf;
        const std::size_t end = std::min(n, (k + 1) * kChunk);
        for (std::size_t i = k * kChunk; i < end; ++i) {
            const EventRecord &e = events[i];
            fmt::format_to(std::back_inserter(buf), "{{\"trial\": {}, \"phi_a\": {}, \"phi_b\": {}, \"a\": \"{}\", \"b\": \"{}\"}}\n",
                           e.trial, phi_a, phi_b, port_sign(e.outcome_a), port_sign(e.outcome_b));
        }
        text[k] = fmt::to_string(buf);
    });
    emit(c.output, out, [&](std::ostream &os) {
        for (const auto &t : text) {
            os << t;
        }
    });

    std::size_t counts[2][2] = {{0, 0}, {0, 0}};
    for (const EventRecord &e : events) {
        ++counts[JointDistribution::idx(e.outcome_a)][JointDistribution::idx(e.outcome_b)];
    }
    err << fmt::format("summary: n={} ++={} +-={} -+={} --={}", n, counts[0][0], counts[0][1], counts[1][0],
                       counts[1][1]);
    if (n >= 2) {
        const EstimatorResult e = estimate_correlation(events);
        err << " E_hat=" << fmt9(e.estimate) << " stderr=" << fmt9(e.std_error);
    }
    err << "\n";
}

namespace {

void add_common(CLI::App *sub, RunConfig &c) {
    sub->add_option("--output,-o", c.output, "Write to this file instead of standard output");
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores); output does not depend on it");
}

void add_visibility(CLI::App *sub, RunConfig &c) {
    sub->add_option("--visibility,-v", c.visibility, "Interference visibility in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
}

void add_grid(CLI::App *sub, RunConfig &c) {
    sub->add_option("--delta-min", c.delta_min, "First phase difference (e.g. 0, pi/4)")->capture_default_str();
    sub->add_option("--delta-max", c.delta_max, "Last phase difference")->capture_default_str();
    sub->add_option("--steps", c.steps, "Number of grid points (>= 2)")->capture_default_str();
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-photon nonlocal interference and pre-measurement simulator", "rtosim"};
    app.require_subcommand(1);
    RunConfig c;

    auto *sweep = app.add_subcommand("sweep", "Correlation versus nonlocal phase difference (CSV)");
    add_grid(sweep, c);
    add_visibility(sweep, c);
    sweep->add_option("--mc", c.mc, "Append Monte Carlo columns E_hat,stderr: n,seed");
    add_common(sweep, c);

    auto *marg = app.add_subcommand("marginals", "Single-detector probabilities versus phase difference");
    add_grid(marg, c);
    add_visibility(marg, c);
    add_common(marg, c);

    auto *bell = app.add_subcommand("bell", "CHSH value, exact and sampled (JSON)");
    auto *opt = bell->add_flag("--optimal", c.optimal, "Use a=0, a'=pi/2, b=pi/4, b'=-pi/4");
    bell->add_option("--angles", c.angles, "Four angles a,a',b,b'")->excludes(opt);
    add_visibility(bell, c);
    bell->add_option("--samples,-n", c.samples, "Events per setting (default 100000)");
    bell->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
    add_common(bell, c);

    auto *pre = app.add_subcommand("premeasure", "Pre-measurement correlation report (JSON)");
    pre->add_option("--theta", c.theta, "Relative phase of the prepared superposition")->capture_default_str();
    pre->add_option("--dump-state", c.dump_state, "Write the state and reduced density matrices as JSON");
    pre->add_option("--output,-o", c.output, "Write to this file instead of standard output");

    auto *sample = app.add_subcommand("sample", "Simulated coincidence events (JSONL)");
    sample->add_option("--phi-a", c.phi_a, "Phase on path A2")->capture_default_str();
    sample->add_option("--phi-b", c.phi_b, "Phase on path B1")->capture_default_str();
    add_visibility(sample, c);
    sample->add_option("--samples,-n", c.samples, "Number of events (default 1000)");
    sample->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
    sample->add_option("--dump-state", c.dump_state, "Write the pre-detection two-photon state as JSON");
    add_common(sample, c);

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "rtosim: error: " << e.what() << "\n";
        return 2;
    }

    for (const CLI::App *sub : app.get_subcommands()) {
        c.subcommand = sub->get_name();
    }

    try {
        if (sweep->parsed()) {
            cmd_sweep(c, out, err);
        } else if (marg->parsed()) {
            cmd_marginals(c, out, err);
        } else if (bell->parsed()) {
            cmd_bell(c, out, err);
        } else if (pre->parsed()) {
            cmd_premeasure(c, out, err);
        } else if (sample->parsed()) {
            cmd_sample(c, out, err);
        }
    } catch (const UsageError &e) {
        err << "rtosim: error: " << e.what() << "\n";
        return 2;
    } catch (const IoError &e) {
        err << "rtosim: error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        err << "rtosim: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rto::cli
