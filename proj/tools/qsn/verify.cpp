// Copyright 2026 The qsn Authors
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

#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "qsn/discrimination.hpp"
#include "qsn/excitation_state.hpp"
#include "qsn/protocols.hpp"
#include "qsn/register_state.hpp"
#include "qsn/rng.hpp"

namespace qsn::cli {

using nlohmann::json;

std::string_view to_string(Fault fault) {
    return fault == Fault::none ? "none" : "unbalanced-splitter";
}

Fault parse_fault(std::string_view text) {
    if (text == "none") {
        return Fault::none;
    }
    if (text == "unbalanced-splitter") {
        return Fault::unbalanced_splitter;
    }
    throw std::invalid_argument("unknown fault \"" + std::string(text) + "\"");
}

namespace {

constexpr double kTolerance = 1e-12;

BeamSplitter compact_splitter(Fault fault) {
    return fault == Fault::unbalanced_splitter ? BeamSplitter{kPi / 4 + 0.1} : BeamSplitter{};
}

json to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

double gaussian(CounterRng& rng) {
    const double u1 = 1.0 - rng.uniform01();  // (0, 1]
    const double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::vector<double> uniform_rates(std::size_t n, CounterRng& rng, double lo, double hi) {
    std::vector<double> out(n);
    for (double& r : out) {
        r = rng.uniform(lo, hi);
    }
    return out;
}

PhaseConfig phases_from(const json& j) {
    return PhaseConfig(j.get<std::vector<double>>());
}

double max_abs_diff(const QubitRegisterState& a, const QubitRegisterState& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        worst = std::max(worst, std::abs(a.amplitude(k) - b.amplitude(k)));
    }
    return worst;
}

double outcome_gap(const OutcomeProbabilities& a, const OutcomeProbabilities& b) {
    return std::max(std::abs(a.p_s - b.p_s), std::abs(a.p_d - b.p_d));
}

struct Evaluation {
    double error = 0.0;
    std::string detail;
};

struct Check {
    std::string_view name;
    bool (*applies)(std::size_t n);
    bool randomized;
    json (*generate)(std::size_t n, CounterRng& rng);
    Evaluation (*evaluate)(std::size_t n, const json& inputs, Fault fault);
};

// ---- w-cascade ------------------------------------------------------------

Evaluation eval_w_cascade(std::size_t n, const json&, Fault fault) {
    const double target = 1.0 / std::sqrt(static_cast<double>(n));
    const auto compact = prepare_w_state<ExcitationState>(n, WMethod::cascade, compact_splitter(fault));
    const auto dense = prepare_w_state<QubitRegisterState>(n, WMethod::cascade);
    double err = std::max(std::abs(compact.vacuum_amp()), std::abs(dense.amplitude(0)));
    for (std::size_t mode = 1; mode <= n; ++mode) {
        err = std::max(err, std::abs(std::abs(compact.mode_amp(mode)) - target));
        err = std::max(err, std::abs(std::abs(dense.amplitude(one_hot_index(n, mode))) - target));
    }
    err = std::max(err, std::abs(dense.norm_squared() - 1.0));
    return {err, "max deviation of one-hot moduli from 1/sqrt(N)"};
}

// ---- ops-equivalence ------------------------------------------------------

constexpr std::array<std::string_view, 4> kOps = {"phase", "x", "swap", "beamsplitter"};

json gen_ops(std::size_t n, CounterRng& rng) {
    const std::size_t ops = n >= 2 ? kOps.size() : 2;  // two-mode ops need two modes
    std::string_view op = kOps[rng.next_u64() % ops];
    const std::size_t a = 1 + rng.next_u64() % n;
    std::size_t b = a;
    if (n >= 2) {
        b = 1 + (a + rng.next_u64() % (n - 1)) % n;  // uniform over modes != a
    }
    std::vector<Complex> amps(n + 1);
    for (Complex& z : amps) {
        z = {gaussian(rng), gaussian(rng)};
    }
    if (op == "x") {
        // bit flip is only defined on support {vacuum, target}
        for (std::size_t mode = 1; mode <= n; ++mode) {
            if (mode != a) {
                amps[mode] = 0.0;
            }
        }
    }
    double norm = 0.0;
    for (const Complex& z : amps) {
        norm += std::norm(z);
    }
    json state = json::array();
    for (const Complex& z : amps) {
        state.push_back(to_json(z / std::sqrt(norm)));
    }
    return {{"op", op}, {"mode_a", a}, {"mode_b", b}, {"theta", rng.uniform(0.0, kTwoPi)}, {"state", state}};
}

Evaluation eval_ops(std::size_t n, const json& in, Fault fault) {
    std::vector<Complex> amps;
    for (const json& z : in.at("state")) {
        amps.push_back(complex_from(z));
    }
    if (amps.size() != n + 1) {
        throw std::invalid_argument("ops-equivalence input has wrong state size");
    }
    const Complex vac = amps.front();
    ExcitationState compact = ExcitationState::from_amplitudes(vac, {amps.begin() + 1, amps.end()});
    QubitRegisterState dense = lift_to_dense(compact);
    const std::string op = in.at("op");
    const auto a = in.at("mode_a").get<std::size_t>();
    const auto b = in.at("mode_b").get<std::size_t>();
    if (op == "phase") {
        const double theta = in.at("theta");
        compact.apply_mode_phase(a, theta);
        dense.apply_mode_phase(a, theta);
    } else if (op == "x") {
        compact.apply_x(a);
        dense.apply_x(a);
    } else if (op == "swap") {
        compact.apply_swap(a, b);
        dense.apply_swap(a, b);
    } else if (op == "beamsplitter") {
        compact.apply_beamsplitter(a, b, compact_splitter(fault));
        dense.apply_beamsplitter(a, b);
    } else {
        throw std::invalid_argument("unknown op \"" + op + "\"");
    }
    double err = max_abs_diff(lift_to_dense(compact), dense);
    err = std::max({err, std::abs(compact.norm_squared() - 1.0), std::abs(dense.norm_squared() - 1.0)});
    return {err, "op " + op + ": max |lift(compact) - dense| and norm drift"};
}

// ---- protocol paths -------------------------------------------------------

json gen_branches(std::size_t n, CounterRng& rng) {
    // log-uniform M in [2, 1e4]
    const long long m = std::llround(std::exp(rng.uniform(std::log(2.0), std::log(1e4))));
    const double half = kPi / static_cast<double>(m);
    return {{"different", uniform_rates(n, rng, 0.0, kTwoPi)},
            {"similar", uniform_rates(n, rng, -half, half)},
            {"m", m},
            {"same_rate", rng.uniform(0.0, kTwoPi)}};
}

struct Branches {
    PhaseConfig same;
    PhaseConfig similar;
    PhaseConfig different;
};

Branches branches_from(std::size_t n, const json& in) {
    Branches b{PhaseConfig::uniform(n, in.at("same_rate").get<double>()), phases_from(in.at("similar")),
               phases_from(in.at("different"))};
    if (b.similar.size() != n || b.different.size() != n) {
        throw std::invalid_argument("protocol input has wrong number of plates");
    }
    return b;
}

Evaluation eval_local_paths(std::size_t n, const json& in, Fault) {
    const Branches br = branches_from(n, in);
    double err = 0.0;
    for (const PhaseConfig* p : {&br.same, &br.similar, &br.different}) {
        const auto dense = project_local(run_local_protocol<QubitRegisterState>(*p));
        const auto compact = project_local(run_local_protocol<ExcitationState>(*p));
        const double c = local_plus_overlap(*p);
        const OutcomeProbabilities closed{c, 1.0 - c};
        err = std::max({err, outcome_gap(dense, compact), outcome_gap(dense, closed), outcome_gap(compact, closed),
                        std::abs(dense.p_s + dense.p_d - 1.0), std::abs(compact.p_s + compact.p_d - 1.0)});
    }
    const DiscriminationTask task_a{Case::same_vs_different};
    const DiscriminationTask task_b{Case::similar_vs_different};
    const double a_dense = simulate_perr<QubitRegisterState>(Strategy::local, task_a, br.same, br.different);
    const double a_compact = simulate_perr<ExcitationState>(Strategy::local, task_a, br.same, br.different);
    const double a_closed = perr_local_a(br.different, task_a);
    const double b_dense = simulate_perr<QubitRegisterState>(Strategy::local, task_b, br.similar, br.different);
    const double b_compact = simulate_perr<ExcitationState>(Strategy::local, task_b, br.similar, br.different);
    const double b_closed = perr_local_b(br.similar, br.different, task_b);
    err = std::max({err, std::abs(a_dense - a_closed), std::abs(a_compact - a_closed), std::abs(b_dense - b_closed),
                    std::abs(b_compact - b_closed)});

    // Output qubit on mode N against (e^{-i sum_odd}|0> + e^{-i sum_even}|1>)/sqrt(2).
    const auto out = run_local_protocol<ExcitationState>(br.different);
    const auto theta = br.different.phases();
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t k = 0; k < n; k += 2) {
        odd += theta[k];
        even += theta[k + 1];
    }
    const Complex expected0 = std::polar(kInvSqrt2, -odd);
    const Complex expected1 = std::polar(kInvSqrt2, -even);
    const Complex overlap = std::conj(expected0) * out.final_state.vacuum_amp() +
                            std::conj(expected1) * out.final_state.mode_amp(n);
    err = std::max(err, std::abs(std::abs(overlap) - 1.0));
    return {err, "max disagreement among dense, compact and closed-form p_S/p_D/P_err"};
}

Evaluation eval_nonlocal_paths(std::size_t n, const json& in, Fault fault) {
    const Branches br = branches_from(n, in);
    const WMethod method = default_w_method(n);
    const BeamSplitter splitter = compact_splitter(fault);
    double err = 0.0;
    for (const PhaseConfig* p : {&br.same, &br.similar, &br.different}) {
        const auto dense = project_nonlocal(run_nonlocal_protocol<QubitRegisterState>(*p, method));
        const auto compact = project_nonlocal(run_nonlocal_protocol<ExcitationState>(*p, method, splitter));
        const double c = w_overlap(*p);
        const OutcomeProbabilities closed{c, 1.0 - c};
        err = std::max({err, outcome_gap(dense, compact), outcome_gap(dense, closed), outcome_gap(compact, closed),
                        std::abs(dense.p_s + dense.p_d - 1.0), std::abs(compact.p_s + compact.p_d - 1.0)});
    }
    const DiscriminationTask task_a{Case::same_vs_different};
    const DiscriminationTask task_b{Case::similar_vs_different};
    const double a_dense =
        simulate_perr<QubitRegisterState>(Strategy::nonlocal, task_a, br.same, br.different, method);
    const double a_compact =
        simulate_perr<ExcitationState>(Strategy::nonlocal, task_a, br.same, br.different, method, splitter);
    const double a_closed = perr_nonlocal_a(br.different, task_a);
    const double b_dense =
        simulate_perr<QubitRegisterState>(Strategy::nonlocal, task_b, br.similar, br.different, method);
    const double b_compact =
        simulate_perr<ExcitationState>(Strategy::nonlocal, task_b, br.similar, br.different, method, splitter);
    const double b_closed = perr_nonlocal_b(br.similar, br.different, task_b);
    err = std::max({err, std::abs(a_dense - a_closed), std::abs(a_compact - a_closed), std::abs(b_dense - b_closed),
                    std::abs(b_compact - b_closed)});
    return {err, std::string("max disagreement among dense, compact and closed-form p_S/p_D/P_err (W via ") +
                     std::string(to_string(method)) + ")"};
}

// ---- same-branch-zero -----------------------------------------------------

json gen_same(std::size_t, CounterRng& rng) {
    return {{"rate", rng.uniform(0.0, kTwoPi)}};
}

Evaluation eval_same(std::size_t n, const json& in, Fault fault) {
    const PhaseConfig same = PhaseConfig::uniform(n, in.at("rate").get<double>());
    const WMethod method = default_w_method(n);
    double err = std::abs(project_nonlocal(run_nonlocal_protocol<QubitRegisterState>(same, method)).p_d);
    err = std::max(err, std::abs(project_nonlocal(run_nonlocal_protocol<ExcitationState>(
                                                      same, method, compact_splitter(fault)))
                                     .p_d));
    if (n % 2 == 0) {
        err = std::max(err, std::abs(project_local(run_local_protocol<QubitRegisterState>(same)).p_d));
        err = std::max(err, std::abs(project_local(run_local_protocol<ExcitationState>(same)).p_d));
    }
    return {err, "max p_D for identical plate phases"};
}

// ---- local-odd-n ----------------------------------------------------------

Evaluation eval_odd(std::size_t n, const json&, Fault) {
    const PhaseConfig phases = PhaseConfig::uniform(n, 0.0);
    int rejected = 0;
    try {
        (void)run_local_protocol<ExcitationState>(phases);
    } catch (const std::invalid_argument&) {
        ++rejected;
    }
    try {
        (void)run_local_protocol<QubitRegisterState>(phases);
    } catch (const std::invalid_argument&) {
        ++rejected;
    }
    if (rejected == 2) {
        return {0.0, "rejected"};
    }
    return {1.0, "odd N accepted by the local protocol"};
}

json gen_none(std::size_t, CounterRng&) {
    return json::object();
}

const std::array<Check, 6> kChecks = {{
    {"w-cascade", [](std::size_t n) { return is_power_of_two(n); }, false, gen_none, eval_w_cascade},
    {"ops-equivalence", [](std::size_t) { return true; }, true, gen_ops, eval_ops},
    {"local-paths", [](std::size_t n) { return n % 2 == 0; }, true, gen_branches, eval_local_paths},
    {"nonlocal-paths", [](std::size_t) { return true; }, true, gen_branches, eval_nonlocal_paths},
    {"same-branch-zero", [](std::size_t) { return true; }, true, gen_same, eval_same},
    {"local-odd-n", [](std::size_t n) { return n % 2 != 0; }, false, gen_none, eval_odd},
}};

Evaluation guarded(const Check& check, std::size_t n, const json& inputs, Fault fault) {
    try {
        return check.evaluate(n, inputs, fault);
    } catch (const std::exception& e) {
        return {std::numeric_limits<double>::infinity(), std::string("exception: ") + e.what()};
    }
}

bool within(double error) {
    return error <= kTolerance;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.n_max < 1 || options.n_max > kMaxDenseModes) {
        throw std::invalid_argument("verify: --n-max must be in [1, " + std::to_string(kMaxDenseModes) + "]");
    }
    if (options.draws < 1) {
        throw std::invalid_argument("verify: --draws must be >= 1");
    }
    VerifyReport report;
    for (std::size_t n = 1; n <= options.n_max; ++n) {
        for (std::size_t c = 0; c < kChecks.size(); ++c) {
            const Check& check = kChecks[c];
            if (!check.applies(n)) {
                continue;
            }
            CheckRow row{std::string(check.name), n, 0, 0.0, kTolerance, true, ""};
            const std::size_t draws = check.randomized ? options.draws : 1;
            for (std::size_t d = 0; d < draws; ++d) {
                CounterRng rng(derive_key({options.seed, c, n, d}));
                const json inputs = check.generate(n, rng);
                const Evaluation ev = guarded(check, n, inputs, options.fault);
                ++row.draws;
                row.max_error = std::max(row.max_error, ev.error);
                if (row.note.empty() || !within(ev.error)) {
                    row.note = ev.detail;
                }
                if (!within(ev.error)) {
                    row.passed = false;
                    if (!report.first_failure) {
                        report.first_failure = VerifyFailure{
                            row.check, n, d, ev.detail,
                            json{{"check", row.check},
                                 {"n", n},
                                 {"draw", d},
                                 {"seed", options.seed},
                                 {"fault", std::string(to_string(options.fault))},
                                 {"inputs", inputs}}};
                    }
                    break;
                }
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

VerifyReport replay_check(const json& replay) {
    const std::string name = replay.at("check");
    const auto it = std::find_if(kChecks.begin(), kChecks.end(), [&](const Check& c) { return c.name == name; });
    if (it == kChecks.end()) {
        throw std::invalid_argument("replay: unknown check \"" + name + "\"");
    }
    const auto n = replay.at("n").get<std::size_t>();
    if (n < 1 || n > kMaxDenseModes) {
        throw std::invalid_argument("replay: N out of range");
    }
    const Fault fault = parse_fault(replay.value("fault", std::string("none")));
    const Evaluation ev = guarded(*it, n, replay.at("inputs"), fault);
    VerifyReport report;
    report.rows.push_back({name, n, 1, ev.error, kTolerance, within(ev.error), ev.detail});
    if (!within(ev.error)) {
        report.first_failure = VerifyFailure{name, n, replay.value("draw", std::size_t{0}), ev.detail, replay};
    }
    return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
    char line[256];
    std::snprintf(line, sizeof line, "%-18s %4s %6s %12s %9s  %-6s %s\n", "check", "N", "draws", "max_error", "tol",
                  "status", "note");
    out << line;
    for (const CheckRow& r : report.rows) {
        std::snprintf(line, sizeof line, "%-18s %4zu %6zu %12.3e %9.1e  %-6s %s\n", r.check.c_str(), r.n, r.draws,
                      r.max_error, r.tolerance, r.passed ? "PASS" : "FAIL", r.note.c_str());
        out << line;
    }
    if (report.passed()) {
        out << "verify: all " << report.rows.size() << " checks passed\n";
    } else {
        const VerifyFailure& f = *report.first_failure;
        out << "verify: FAILED check " << f.check << " at N=" << f.n << ", draw " << f.draw << ": " << f.detail
            << '\n';
    }
}

}  // namespace qsn::cli
