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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qsn/discrimination.hpp"
#include "qsn/phase_config.hpp"
#include "qsn/protocols.hpp"
#include "qsn/rng.hpp"

namespace qsn {

enum class StrategyChoice { local, nonlocal, both };

/// How each trial's error probability is evaluated.
enum class Backend {
    closed_form,  // overlap formulas, O(N)
    sim_compact,  // full circuit on ExcitationState
    sim_dense,    // full circuit on QubitRegisterState, N <= kMaxDenseModes
};

std::string_view to_string(StrategyChoice choice);
std::string_view to_string(Backend backend);
std::vector<Strategy> expand(StrategyChoice choice);

struct SamplingPlan {
    Case which = Case::same_vs_different;
    StrategyChoice strategy = StrategyChoice::both;
    std::vector<std::size_t> n_values;
    std::size_t trials = 1;
    std::optional<long long> m;  // case (b) only
    std::uint64_t seed = 0;
    double interaction_time = 1.0;
    Backend backend = Backend::closed_form;
};

/// Throws std::invalid_argument describing the first problem found.
void validate(const SamplingPlan& plan);

struct TrialAggregate {
    Case which = Case::same_vs_different;
    Strategy strategy = Strategy::local;
    std::size_t n = 0;
    std::size_t trials = 0;
    double mean_perr = 0.0;
    double std_error = 0.0;  // unbiased sample std / sqrt(trials); 0 for a single trial
    AnalyticMean analytic;
};

/// N i.i.d. plate rates on [0, 2pi).
PhaseConfig sample_uniform_full(std::size_t num_plates, CounterRng& rng, double interaction_time = 1.0);

/// N i.i.d. plate rates on [-pi/M, pi/M]; M >= 2.
PhaseConfig sample_uniform_narrow(std::size_t num_plates, long long m, CounterRng& rng,
                                  double interaction_time = 1.0);

PhaseConfig sample_scenario(const ScenarioSpec& scenario, std::size_t num_plates, CounterRng& rng,
                            double interaction_time = 1.0);

/// Root stream of one trial. Its substreams feed the branches:
/// 0 -> Different phases, 1 -> Similar phases, 2 -> the common Same rate.
CounterRng trial_stream(const SamplingPlan& plan, Strategy strategy, std::size_t n, std::uint64_t trial_index);

/// Branch phase configurations drawn for one trial.
struct TrialDraw {
    PhaseConfig first;      // Same (case a) or Similar (case b)
    PhaseConfig different;
};

TrialDraw draw_trial(const SamplingPlan& plan, Strategy strategy, std::size_t n, std::uint64_t trial_index);

/// Error probability of a single trial under the plan's back end.
double run_trial(const SamplingPlan& plan, Strategy strategy, std::size_t n, std::uint64_t trial_index);

struct RunOptions {
    unsigned threads = 1;
};

/// One aggregate per (strategy, N), strategies outermost in local, nonlocal
/// order and N in plan order. Trials run in parallel but are reduced in trial
/// order, so the result is bit-identical for any thread count.
std::vector<TrialAggregate> run_plan(const SamplingPlan& plan, const RunOptions& options = {});

}  // namespace qsn
