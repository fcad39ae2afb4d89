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
#include <string_view>
#include <variant>

#include "qsn/excitation_state.hpp"
#include "qsn/phase_config.hpp"
#include "qsn/register_state.hpp"

namespace qsn {

enum class Strategy { local, nonlocal };

/// Which pair of plate ensembles is being told apart.
enum class Case {
    same_vs_different,     // case (a): identical phases vs i.i.d. uniform on [0, 2pi)
    similar_vs_different,  // case (b): i.i.d. uniform on [-pi/M, pi/M] vs [0, 2pi)
};

/// How the W state is built from a single photon entering mode 1.
enum class WMethod {
    cascade,  // binary tree of 50/50 splitters, N = 2^m only
    direct,   // equal-amplitude one-hot superposition written in directly, any N
};

std::string_view to_string(Strategy strategy);
std::string_view to_string(Case c);
std::string_view to_string(WMethod method);

/// Plate ensembles.
struct SameScenario {
    double rate = 0.0;
};
struct DifferentUniformScenario {};
struct SimilarNarrowScenario {
    long long m = 2;  // phases in [-pi/m, pi/m], m >= 2
};
using ScenarioSpec = std::variant<SameScenario, DifferentUniformScenario, SimilarNarrowScenario>;

void validate(const ScenarioSpec& scenario);

/// Binary hypothesis test between a "first" ensemble (Same or Similar) and
/// the Different ensemble, with prior weights.
struct DiscriminationTask {
    Case which = Case::same_vs_different;
    double prior_first = 0.5;
    double prior_second = 0.5;
};

void validate(const DiscriminationTask& task);

/// Outcome probabilities of the two-element measurement: p_s for the
/// "first ensemble" projector (S or Sim), p_d for the Different projector.
struct OutcomeProbabilities {
    double p_s = 0.0;
    double p_d = 0.0;
};

template <class State>
struct LocalProtocolResult {
    State final_state;
    std::size_t photon_mode_of_interest = 0;  // mode N
};

template <class State>
struct NonlocalProtocolResult {
    State final_state;
    State w_state;  // the prepared probe; defines the |w><w| projector
};

/// (|0> + |1>)/sqrt(2) on mode 1, vacuum elsewhere. N must be even and >= 2.
template <class State>
State prepare_local_initial(std::size_t num_modes);

/// Single photon spread evenly over N modes. `splitter` only affects the
/// cascade method.
template <class State>
State prepare_w_state(std::size_t num_modes, WMethod method, BeamSplitter splitter = {});

bool is_power_of_two(std::size_t n) noexcept;

/// Cascade when N is a power of two, direct otherwise.
WMethod default_w_method(std::size_t num_modes) noexcept;

/// Sequential interrogation: N-1 rounds of (plate phases, bit flip on the
/// current mode, SWAP to the next mode), then a final pass through the
/// plates. Leaves the photon qubit on mode N.
template <class State>
LocalProtocolResult<State> run_local_protocol(const PhaseConfig& phases);

/// W-state probe sent through all plates in parallel.
template <class State>
NonlocalProtocolResult<State> run_nonlocal_protocol(const PhaseConfig& phases, WMethod method,
                                                    BeamSplitter splitter = {});

/// p_s = Tr[(1 (x) |+><+|_N) rho], p_d = Tr[(1 (x) |-><-|_N) rho].
OutcomeProbabilities project_local(const LocalProtocolResult<QubitRegisterState>& result);
OutcomeProbabilities project_local(const LocalProtocolResult<ExcitationState>& result);

/// p_s = |<w|final>|^2, p_d = <final|final> - p_s.
OutcomeProbabilities project_nonlocal(const NonlocalProtocolResult<QubitRegisterState>& result);
OutcomeProbabilities project_nonlocal(const NonlocalProtocolResult<ExcitationState>& result);

}  // namespace qsn
