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

#include "qsn/discrimination.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsn {

namespace {

constexpr double kRoundingSlack = 1e-12;

void expect_case(const DiscriminationTask& task, Case expected) {
    validate(task);
    if (task.which != expected) {
        throw std::invalid_argument(std::string("discrimination task is case (") + std::string(to_string(task.which)) +
                                    "), formula is for case (" + std::string(to_string(expected)) + ")");
    }
}

void expect_even(const PhaseConfig& phases) {
    if (phases.size() < 2 || phases.size() % 2 != 0) {
        throw std::invalid_argument("local strategy needs an even number of plates >= 2, got " +
                                    std::to_string(phases.size()));
    }
}

void expect_same_size(const PhaseConfig& a, const PhaseConfig& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("branch phase configurations differ in size: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
    if (a.size() == 0) {
        throw std::invalid_argument("need at least one plate");
    }
}

}  // namespace

ErrorProbability::ErrorProbability(double value) : value_(value) {
    if (!(value >= -kRoundingSlack && value <= 1.0 + kRoundingSlack)) {
        throw std::domain_error("error probability " + std::to_string(value) + " outside [0, 1]");
    }
    value_ = std::fmin(1.0, std::fmax(0.0, value));
}

double local_plus_overlap(const PhaseConfig& phases) {
    expect_even(phases);
    double alternating = 0.0;
    const auto theta = phases.phases();
    for (std::size_t k = 0; k < theta.size(); k += 2) {
        alternating += theta[k] - theta[k + 1];
    }
    const double c = std::cos(0.5 * alternating);
    return c * c;
}

double w_overlap(const PhaseConfig& phases) {
    if (phases.size() == 0) {
        throw std::invalid_argument("w_overlap: need at least one plate");
    }
    double re = 0.0;
    double im = 0.0;
    const double t = phases.interaction_time();
    for (double rate : phases.rates()) {
        re += std::cos(rate * t);
        im += std::sin(rate * t);
    }
    const double n = static_cast<double>(phases.size());
    return (re * re + im * im) / (n * n);
}

ErrorProbability error_probability(const DiscriminationTask& task, const OutcomeProbabilities& first_branch,
                                   const OutcomeProbabilities& different_branch) {
    validate(task);
    return ErrorProbability(1.0 - task.prior_first * first_branch.p_s - task.prior_second * different_branch.p_d);
}

ErrorProbability perr_local_a(const PhaseConfig& phases_d, const DiscriminationTask& task) {
    expect_case(task, Case::same_vs_different);
    return ErrorProbability(task.prior_second * local_plus_overlap(phases_d));
}

ErrorProbability perr_nonlocal_a(const PhaseConfig& phases_d, const DiscriminationTask& task) {
    expect_case(task, Case::same_vs_different);
    return ErrorProbability(task.prior_second * w_overlap(phases_d));
}

ErrorProbability perr_local_b(const PhaseConfig& phases_sim, const PhaseConfig& phases_d,
                              const DiscriminationTask& task) {
    expect_case(task, Case::similar_vs_different);
    expect_same_size(phases_sim, phases_d);
    return ErrorProbability(task.prior_first * (1.0 - local_plus_overlap(phases_sim)) +
                            task.prior_second * local_plus_overlap(phases_d));
}

ErrorProbability perr_nonlocal_b(const PhaseConfig& phases_sim, const PhaseConfig& phases_d,
                                 const DiscriminationTask& task) {
    expect_case(task, Case::similar_vs_different);
    expect_same_size(phases_sim, phases_d);
    return ErrorProbability(task.prior_first * (1.0 - w_overlap(phases_sim)) +
                            task.prior_second * w_overlap(phases_d));
}

template <class State>
ErrorProbability simulate_perr(Strategy strategy, const DiscriminationTask& task, const PhaseConfig& first_branch,
                               const PhaseConfig& different_branch, std::optional<WMethod> w_method,
                               BeamSplitter splitter) {
    expect_same_size(first_branch, different_branch);
    if (strategy == Strategy::local) {
        const auto first = project_local(run_local_protocol<State>(first_branch));
        const auto different = project_local(run_local_protocol<State>(different_branch));
        return error_probability(task, first, different);
    }
    const WMethod method = w_method.value_or(default_w_method(first_branch.size()));
    const auto first = project_nonlocal(run_nonlocal_protocol<State>(first_branch, method, splitter));
    const auto different = project_nonlocal(run_nonlocal_protocol<State>(different_branch, method, splitter));
    return error_probability(task, first, different);
}

template ErrorProbability simulate_perr<QubitRegisterState>(Strategy, const DiscriminationTask&, const PhaseConfig&,
                                                            const PhaseConfig&, std::optional<WMethod>,
                                                            BeamSplitter);
template ErrorProbability simulate_perr<ExcitationState>(Strategy, const DiscriminationTask&, const PhaseConfig&,
                                                         const PhaseConfig&, std::optional<WMethod>, BeamSplitter);

std::string_view to_string(Accuracy accuracy) {
    return accuracy == Accuracy::exact ? "exact" : "leading-order";
}

AnalyticMean analytic_mean(Case which, Strategy strategy, std::size_t num_plates, std::optional<long long> m) {
    if (num_plates < 1) {
        throw std::invalid_argument("analytic_mean: need at least one plate");
    }
    if (strategy == Strategy::local && num_plates % 2 != 0) {
        throw std::invalid_argument("analytic_mean: local strategy needs an even number of plates, got " +
                                    std::to_string(num_plates));
    }
    const double n = static_cast<double>(num_plates);
    if (which == Case::same_vs_different) {
        return {strategy == Strategy::local ? 0.25 : 1.0 / (2.0 * n), Accuracy::exact};
    }
    if (!m) {
        throw std::invalid_argument("analytic_mean: case (b) needs M");
    }
    if (*m < 2) {
        throw std::invalid_argument("analytic_mean: M must be >= 2, got " + std::to_string(*m));
    }
    const double m2 = static_cast<double>(*m) * static_cast<double>(*m);
    const double pi2 = kPi * kPi;
    if (strategy == Strategy::local) {
        return {n / 24.0 * pi2 / m2 + 0.25, Accuracy::leading_order};
    }
    return {0.5 * (pi2 / (3.0 * m2) - pi2 / (3.0 * n * m2) + 1.0 / n), Accuracy::leading_order};
}

}  // namespace qsn
