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
#include <optional>
#include <string_view>

#include "qsn/phase_config.hpp"
#include "qsn/protocols.hpp"

namespace qsn {

/// A probability of misidentifying the plate ensemble, always in [0, 1].
class ErrorProbability {
  public:
    /// Values within 1e-12 outside [0, 1] are rounding and get clamped;
    /// anything further out throws std::domain_error.
    explicit ErrorProbability(double value);

    double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; }

  private:
    double value_;
};

/// |<+|psi>|^2 = cos^2((theta_1 - theta_2 + theta_3 - ... - theta_N) / 2) for
/// the local protocol output qubit. N must be even.
double local_plus_overlap(const PhaseConfig& phases);

/// |<w|w_theta>|^2 = |(1/N) sum_j e^{i theta_j}|^2.
double w_overlap(const PhaseConfig& phases);

/// P_err = 1 - prior_first Tr[P_first rho_first] - prior_second Tr[P_D rho_D].
ErrorProbability error_probability(const DiscriminationTask& task, const OutcomeProbabilities& first_branch,
                                   const OutcomeProbabilities& different_branch);

// Closed forms. The Same branch never triggers the Different projector, so
// case (a) reduces to prior_second times the Different branch's S-overlap.

ErrorProbability perr_local_a(const PhaseConfig& phases_d, const DiscriminationTask& task = {});
ErrorProbability perr_nonlocal_a(const PhaseConfig& phases_d, const DiscriminationTask& task = {});
ErrorProbability perr_local_b(const PhaseConfig& phases_sim, const PhaseConfig& phases_d,
                              const DiscriminationTask& task = {Case::similar_vs_different});
ErrorProbability perr_nonlocal_b(const PhaseConfig& phases_sim, const PhaseConfig& phases_d,
                                 const DiscriminationTask& task = {Case::similar_vs_different});

/// Runs the circuit for each branch on the chosen back end and combines the
/// projector probabilities with the task priors. `w_method` defaults to
/// default_w_method(N).
template <class State>
ErrorProbability simulate_perr(Strategy strategy, const DiscriminationTask& task, const PhaseConfig& first_branch,
                               const PhaseConfig& different_branch, std::optional<WMethod> w_method = std::nullopt,
                               BeamSplitter splitter = {});

enum class Accuracy {
    exact,
    leading_order,  // small-angle expansion, valid for M >> 1
};

std::string_view to_string(Accuracy accuracy);

struct AnalyticMean {
    double value = 0.0;
    Accuracy accuracy = Accuracy::exact;
};

/// Ensemble-averaged error probability with equal priors:
///   (a, local)     1/4
///   (a, nonlocal)  1/(2N)
///   (b, local)     N pi^2 / (24 M^2) + 1/4
///   (b, nonlocal)  (pi^2/(3M^2) - pi^2/(3 N M^2) + 1/N) / 2
/// M is required for case (b) and ignored for case (a). Case (b) values are
/// leading order in 1/M and are not clamped to [0, 1].
AnalyticMean analytic_mean(Case which, Strategy strategy, std::size_t num_plates,
                           std::optional<long long> m = std::nullopt);

}  // namespace qsn
