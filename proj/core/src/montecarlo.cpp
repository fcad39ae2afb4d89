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

#include "qsn/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "qsn/excitation_state.hpp"
#include "qsn/register_state.hpp"

namespace qsn {

std::string_view to_string(StrategyChoice choice) {
    switch (choice) {
        case StrategyChoice::local:
            return "local";
        case StrategyChoice::nonlocal:
            return "nonlocal";
        case StrategyChoice::both:
            return "both";
    }
    return "?";
}

std::string_view to_string(Backend backend) {
    switch (backend) {
        case Backend::closed_form:
            return "closed-form";
        case Backend::sim_compact:
            return "sim-compact";
        case Backend::sim_dense:
            return "sim-dense";
    }
    return "?";
}

std::vector<Strategy> expand(StrategyChoice choice) {
    switch (choice) {
        case StrategyChoice::local:
            return {Strategy::local};
        case StrategyChoice::nonlocal:
            return {Strategy::nonlocal};
        case StrategyChoice::both:
            break;
    }
    return {Strategy::local, Strategy::nonlocal};
}

void validate(const SamplingPlan& plan) {
    if (plan.trials < 1) {
        throw std::invalid_argument("sampling plan: trials must be >= 1");
    }
    if (plan.n_values.empty()) {
        throw std::invalid_argument("sampling plan: no N values");
    }
    if (!std::isfinite(plan.interaction_time)) {
        throw std::invalid_argument("sampling plan: interaction time must be finite");
    }
    const bool has_local = plan.strategy != StrategyChoice::nonlocal;
    for (std::size_t n : plan.n_values) {
        if (n < 1) {
            throw std::invalid_argument("sampling plan: N must be >= 1");
        }
        if (has_local && n % 2 != 0) {
            throw std::invalid_argument("sampling plan: local strategy needs even N, got " + std::to_string(n));
        }
        if (plan.backend == Backend::sim_dense && n > kMaxDenseModes) {
            throw std::invalid_argument("sampling plan: sim-dense back end is limited to N <= " +
                                        std::to_string(kMaxDenseModes) + ", got " + std::to_string(n));
        }
    }
    if (plan.which == Case::similar_vs_different) {
        if (!plan.m) {
            throw std::invalid_argument("sampling plan: case (b) needs M");
        }
        if (*plan.m < 2) {
            throw std::invalid_argument("sampling plan: M must be >= 2, got " + std::to_string(*plan.m));
        }
    }
}

PhaseConfig sample_uniform_full(std::size_t num_plates, CounterRng& rng, double interaction_time) {
    std::vector<double> rates(num_plates);
    for (double& r : rates) {
        r = rng.uniform(0.0, kTwoPi);
    }
    return PhaseConfig(std::move(rates), interaction_time);
}

PhaseConfig sample_uniform_narrow(std::size_t num_plates, long long m, CounterRng& rng, double interaction_time) {
    if (m < 2) {
        throw std::invalid_argument("sample_uniform_narrow: M must be >= 2, got " + std::to_string(m));
    }
    const double half_width = kPi / static_cast<double>(m);
    std::vector<double> rates(num_plates);
    for (double& r : rates) {
        r = rng.uniform(-half_width, half_width);
    }
    return PhaseConfig(std::move(rates), interaction_time);
}

PhaseConfig sample_scenario(const ScenarioSpec& scenario, std::size_t num_plates, CounterRng& rng,
                            double interaction_time) {
    validate(scenario);
    if (const auto* same = std::get_if<SameScenario>(&scenario)) {
        return PhaseConfig::uniform(num_plates, same->rate, interaction_time);
    }
    if (const auto* narrow = std::get_if<SimilarNarrowScenario>(&scenario)) {
        return sample_uniform_narrow(num_plates, narrow->m, rng, interaction_time);
    }
    return sample_uniform_full(num_plates, rng, interaction_time);
}

CounterRng trial_stream(const SamplingPlan& plan, Strategy strategy, std::size_t n, std::uint64_t trial_index) {
    return CounterRng(derive_key({plan.seed, static_cast<std::uint64_t>(plan.which),
                                  static_cast<std::uint64_t>(strategy), static_cast<std::uint64_t>(n),
                                  trial_index}));
}

TrialDraw draw_trial(const SamplingPlan& plan, Strategy strategy, std::size_t n, std::uint64_t trial_index) {
    const CounterRng root = trial_stream(plan, strategy, n, trial_index);
    const double t = plan.interaction_time;
    CounterRng different_stream = root.substream(0);
    PhaseConfig different = sample_uniform_full(n, different_stream, t);
    if (plan.which == Case::similar_vs_different) {
        CounterRng similar_stream = root.substream(1);
        return {sample_uniform_narrow(n, plan.m.value(), similar_stream, t), std::move(different)};
    }
    CounterRng same_stream = root.substream(2);
    const double same_rate = same_stream.uniform(0.0, kTwoPi);
    return {PhaseConfig::uniform(n, same_rate, t), std::move(different)};
}

double run_trial(const SamplingPlan& plan, Strategy strategy, std::size_t n, std::uint64_t trial_index) {
    const TrialDraw draw = draw_trial(plan, strategy, n, trial_index);
    const DiscriminationTask task{plan.which};
    switch (plan.backend) {
        case Backend::closed_form:
            if (plan.which == Case::same_vs_different) {
                return strategy == Strategy::local ? perr_local_a(draw.different, task)
                                                   : perr_nonlocal_a(draw.different, task);
            }
            return strategy == Strategy::local ? perr_local_b(draw.first, draw.different, task)
                                               : perr_nonlocal_b(draw.first, draw.different, task);
        case Backend::sim_compact:
            return simulate_perr<ExcitationState>(strategy, task, draw.first, draw.different);
        case Backend::sim_dense:
            return simulate_perr<QubitRegisterState>(strategy, task, draw.first, draw.different);
    }
    throw std::logic_error("run_trial: unknown back end");
}

namespace {

TrialAggregate aggregate(const SamplingPlan& plan, Strategy strategy, std::size_t n,
                         const std::vector<double>& values) {
    TrialAggregate out;
    out.which = plan.which;
    out.strategy = strategy;
    out.n = n;
    out.trials = values.size();
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    out.mean_perr = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double squares = 0.0;
        for (double v : values) {
            squares += (v - out.mean_perr) * (v - out.mean_perr);
        }
        const double variance = squares / static_cast<double>(values.size() - 1);
        out.std_error = std::sqrt(variance / static_cast<double>(values.size()));
    }
    out.analytic = analytic_mean(plan.which, strategy, n, plan.m);
    return out;
}

}  // namespace

std::vector<TrialAggregate> run_plan(const SamplingPlan& plan, const RunOptions& options) {
    validate(plan);
    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, plan.trials);
    std::vector<TrialAggregate> out;
    std::vector<double> values(plan.trials);
    for (Strategy strategy : expand(plan.strategy)) {
        for (std::size_t n : plan.n_values) {
            auto work = [&](std::size_t begin, std::size_t end) {
                for (std::size_t k = begin; k < end; ++k) {
                    values[k] = run_trial(plan, strategy, n, k);
                }
            };
            if (workers == 1) {
                work(0, plan.trials);
            } else {
                std::vector<std::exception_ptr> errors(workers);
                {
                    std::vector<std::jthread> pool;
                    pool.reserve(workers);
                    for (std::size_t w = 0; w < workers; ++w) {
                        const std::size_t begin = plan.trials * w / workers;
                        const std::size_t end = plan.trials * (w + 1) / workers;
                        pool.emplace_back([&, w, begin, end] {
                            try {
                                work(begin, end);
                            } catch (...) {
                                errors[w] = std::current_exception();
                            }
                        });
                    }
                }
                for (const auto& e : errors) {
                    if (e) {
                        std::rethrow_exception(e);
                    }
                }
            }
            out.push_back(aggregate(plan, strategy, n, values));
        }
    }
    return out;
}

}  // namespace qsn
