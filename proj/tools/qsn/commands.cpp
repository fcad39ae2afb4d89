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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "n_list.hpp"
#include "qsn/discrimination.hpp"
#include "qsn/montecarlo.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace qsn::cli {

namespace {

const std::map<std::string, Case> kCaseNames = {{"a", Case::same_vs_different}, {"b", Case::similar_vs_different}};
const std::map<std::string, StrategyChoice> kStrategyNames = {
    {"local", StrategyChoice::local}, {"nonlocal", StrategyChoice::nonlocal}, {"both", StrategyChoice::both}};
const std::map<std::string, Backend> kBackendNames = {
    {"closed-form", Backend::closed_form}, {"sim-compact", Backend::sim_compact}, {"sim-dense", Backend::sim_dense}};

constexpr const char* kNListHelp =
    "Plate counts: comma list (2,4,8) and/or inclusive ranges start:end:step (2:10:2); "
    "end is included only when the step lands on it";

/// Writes `text` to `path`, or to `out` when path is empty or "-".
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
    if (path.empty() || path == "-") {
        out << text;
        return static_cast<bool>(out);
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: failed writing " << path << '\n';
        return false;
    }
    return true;
}

struct SweepArgs {
    std::string which;
    std::string strategy = "both";
    std::string n_list;
    std::size_t trials = 100000;
    long long m = 0;
    std::uint64_t seed = 0;
    std::string backend = "closed-form";
    std::string out_path;
    std::string format = "csv";
    unsigned threads = 0;
    double interaction_time = 1.0;
};

struct VerifyArgs {
    std::size_t n_max = 8;
    std::size_t draws = 1000;
    std::uint64_t seed = 0;
    std::string replay_path;
    std::string failure_path = "verify_failure.json";
    std::string fault = "none";
};

struct AnalyticArgs {
    std::string which;
    std::string strategy = "both";
    std::string n_list;
    long long m = 0;
    std::string out_path;
};

int do_sweep(const SweepArgs& a, bool has_m, std::ostream& out, std::ostream& err) {
    SamplingPlan plan;
    plan.which = kCaseNames.at(a.which);
    plan.strategy = kStrategyNames.at(a.strategy);
    plan.n_values = parse_n_list(a.n_list);
    plan.trials = a.trials;
    if (has_m) {
        plan.m = a.m;
    }
    plan.seed = a.seed;
    plan.backend = kBackendNames.at(a.backend);
    plan.interaction_time = a.interaction_time;
    validate(plan);

    if (plan.backend != Backend::closed_form && plan.strategy != StrategyChoice::local) {
        for (std::size_t n : plan.n_values) {
            if (!is_power_of_two(n)) {
                err << "warning: N=" << n
                    << " is not a power of two; the beam-splitter cascade only covers N = 2^m, "
                       "using direct W-state preparation\n";
            }
        }
    }

    const unsigned threads = resolve_threads(a.threads, std::getenv("QSN_THREADS"));
    const std::vector<TrialAggregate> rows = run_plan(plan, RunOptions{threads});

    std::ostringstream text;
    if (a.format == "json") {
        text << sweep_json(plan, rows).dump(2) << '\n';
    } else {
        write_sweep_csv(text, plan, rows);
    }
    return emit(a.out_path, text.str(), out, err) ? kExitOk : kExitFailure;
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    VerifyReport report;
    if (!a.replay_path.empty()) {
        std::ifstream file(a.replay_path);
        if (!file) {
            err << "error: cannot read replay file " << a.replay_path << '\n';
            return kExitFailure;
        }
        nlohmann::json replay;
        try {
            file >> replay;
        } catch (const nlohmann::json::exception& e) {
            err << "error: replay file " << a.replay_path << " is not valid JSON: " << e.what() << '\n';
            return kExitFailure;
        }
        report = replay_check(replay);
    } else {
        report = run_verification(VerifyOptions{a.n_max, a.draws, a.seed, parse_fault(a.fault)});
    }
    print_report(out, report);
    if (report.passed()) {
        return kExitOk;
    }
    const std::string dump = report.first_failure->replay.dump(2) + "\n";
    out << "offending inputs (replay with: qsn verify --replay " << a.failure_path << "):\n" << dump;
    if (a.replay_path.empty()) {
        emit(a.failure_path, dump, out, err);
    }
    return kExitFailure;
}

int do_analytic(const AnalyticArgs& a, bool has_m, std::ostream& out, std::ostream& err) {
    const Case which = kCaseNames.at(a.which);
    if (which == Case::similar_vs_different && !has_m) {
        throw std::invalid_argument("analytic: case b needs --m");
    }
    std::optional<long long> m;
    if (has_m) {
        m = a.m;
    }
    std::vector<AnalyticRow> rows;
    for (Strategy strategy : expand(kStrategyNames.at(a.strategy))) {
        for (std::size_t n : parse_n_list(a.n_list)) {
            rows.push_back({which, strategy, n, m, analytic_mean(which, strategy, n, m)});
        }
    }
    std::ostringstream text;
    write_analytic_csv(text, rows);
    return emit(a.out_path, text.str(), out, err) ? kExitOk : kExitFailure;
}

}  // namespace

unsigned resolve_threads(unsigned requested, const char* env_cap) {
    unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (env_cap != nullptr) {
        const std::string_view text(env_cap);
        unsigned cap = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
        if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0) {
            threads = std::min(threads, cap);
        }
    }
    return threads;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-photon phase-plate identification: local vs W-state probes", "qsn"};
    app.require_subcommand(1);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep of mean error probability over N");
    sweep->add_option("--case", sweep_args.which, "a: same vs different, b: similar vs different")
        ->required()
        ->check(CLI::IsMember({"a", "b"}));
    sweep->add_option("--strategy", sweep_args.strategy, "local, nonlocal or both")
        ->check(CLI::IsMember({"local", "nonlocal", "both"}))
        ->capture_default_str();
    sweep->add_option("--n", sweep_args.n_list, kNListHelp)->required();
    sweep->add_option("--trials", sweep_args.trials, "Trials per (strategy, N)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* sweep_m = sweep->add_option("--m", sweep_args.m, "Similar ensemble width: phases in [-pi/M, pi/M] (case b)");
    sweep->add_option("--seed", sweep_args.seed, "64-bit seed")->capture_default_str();
    sweep->add_option("--backend", sweep_args.backend, "closed-form, sim-compact or sim-dense (N <= 20)")
        ->check(CLI::IsMember({"closed-form", "sim-compact", "sim-dense"}))
        ->capture_default_str();
    sweep->add_option("--out", sweep_args.out_path, "Output file (default: stdout)");
    sweep->add_option("--format", sweep_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sweep->add_option("--threads", sweep_args.threads,
                      "Worker threads (0 = all cores); QSN_THREADS caps this. Never changes results")
        ->capture_default_str();
    sweep->add_option("-t,--interaction-time", sweep_args.interaction_time, "Plate interaction time t")
        ->capture_default_str();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Cross-check dense, compact and closed-form evaluation paths");
    verify->add_option("--n-max", verify_args.n_max, "Check N = 1..n-max (<= 20)")->capture_default_str();
    verify->add_option("--draws", verify_args.draws, "Random draws per check and N")->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "64-bit seed")->capture_default_str();
    verify->add_option("--replay", verify_args.replay_path, "Re-run a failure dump written by an earlier verify");
    verify->add_option("--failure-out", verify_args.failure_path, "Where to write the failure dump")
        ->capture_default_str();
    verify->add_option("--inject-fault", verify_args.fault, "Testing only: none or unbalanced-splitter")
        ->check(CLI::IsMember({"none", "unbalanced-splitter"}))
        ->group("");

    AnalyticArgs analytic_args;
    auto* analytic = app.add_subcommand("analytic", "Print the analytic ensemble-mean error probability");
    analytic->add_option("--case", analytic_args.which, "a or b")->required()->check(CLI::IsMember({"a", "b"}));
    analytic->add_option("--strategy", analytic_args.strategy, "local, nonlocal or both")
        ->check(CLI::IsMember({"local", "nonlocal", "both"}))
        ->capture_default_str();
    analytic->add_option("--n", analytic_args.n_list, kNListHelp)->required();
    auto* analytic_m = analytic->add_option("--m", analytic_args.m, "Similar ensemble width (case b)");
    analytic->add_option("--out", analytic_args.out_path, "Output file (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            return do_sweep(sweep_args, sweep_m->count() > 0, out, err);
        }
        if (verify->parsed()) {
            return do_verify(verify_args, out, err);
        }
        return do_analytic(analytic_args, analytic_m->count() > 0, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace qsn::cli
