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

#include "qsn/protocols.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace qsn {

std::string_view to_string(Strategy strategy) {
    return strategy == Strategy::local ? "local" : "nonlocal";
}

std::string_view to_string(Case c) {
    return c == Case::same_vs_different ? "a" : "b";
}

std::string_view to_string(WMethod method) {
    return method == WMethod::cascade ? "cascade" : "direct";
}

void validate(const ScenarioSpec& scenario) {
    if (const auto* same = std::get_if<SameScenario>(&scenario)) {
        if (!std::isfinite(same->rate)) {
            throw std::invalid_argument("Same scenario: rate must be finite");
        }
    } else if (const auto* narrow = std::get_if<SimilarNarrowScenario>(&scenario)) {
        if (narrow->m < 2) {
            throw std::invalid_argument("SimilarNarrow scenario: M must be >= 2, got " + std::to_string(narrow->m));
        }
    }
}

void validate(const DiscriminationTask& task) {
    if (!(task.prior_first >= 0.0) || !(task.prior_second >= 0.0)) {
        throw std::invalid_argument("DiscriminationTask: priors must be nonnegative");
    }
    if (std::abs(task.prior_first + task.prior_second - 1.0) > 1e-15) {
        throw std::invalid_argument("DiscriminationTask: priors must sum to 1");
    }
}

bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

WMethod default_w_method(std::size_t num_modes) noexcept {
    return is_power_of_two(num_modes) ? WMethod::cascade : WMethod::direct;
}

namespace {

void check_local_modes(std::size_t num_modes) {
    if (num_modes < 2 || num_modes % 2 != 0) {
        throw std::invalid_argument("local protocol needs an even number of plates >= 2, got " +
                                    std::to_string(num_modes));
    }
}

template <class State>
State state_from_amplitudes(Complex vacuum_amp, const std::vector<Complex>& mode_amps) {
    if constexpr (std::is_same_v<State, ExcitationState>) {
        return ExcitationState::from_amplitudes(vacuum_amp, mode_amps);
    } else {
        return lift_to_dense(ExcitationState::from_amplitudes(vacuum_amp, mode_amps));
    }
}

}  // namespace

template <class State>
State prepare_local_initial(std::size_t num_modes) {
    check_local_modes(num_modes);
    std::vector<Complex> mode_amps(num_modes);
    mode_amps[0] = kInvSqrt2;
    return state_from_amplitudes<State>(kInvSqrt2, mode_amps);
}

template <class State>
State prepare_w_state(std::size_t num_modes, WMethod method, BeamSplitter splitter) {
    if (num_modes < 1) {
        throw std::invalid_argument("W state needs at least one mode");
    }
    if (method == WMethod::direct) {
        const std::vector<Complex> mode_amps(num_modes, 1.0 / std::sqrt(static_cast<double>(num_modes)));
        return state_from_amplitudes<State>(0.0, mode_amps);
    }
    if (!is_power_of_two(num_modes)) {
        throw std::invalid_argument("cascade W-state preparation needs N = 2^m modes, got N = " +
                                    std::to_string(num_modes) + " (use the direct method)");
    }
    std::vector<Complex> mode_amps(num_modes);
    mode_amps[0] = 1.0;
    State state = state_from_amplitudes<State>(0.0, mode_amps);
    // Each layer halves the stride: the photon in mode a is split onto a + stride.
    for (std::size_t stride = num_modes / 2; stride >= 1; stride /= 2) {
        for (std::size_t a = 1; a <= num_modes; a += 2 * stride) {
            state.apply_beamsplitter(a, a + stride, splitter);
        }
    }
    return state;
}

template <class State>
LocalProtocolResult<State> run_local_protocol(const PhaseConfig& phases) {
    const std::size_t n = phases.size();
    check_local_modes(n);
    State state = prepare_local_initial<State>(n);
    const std::vector<Complex> factors = phases.phase_factors();
    for (std::size_t j = 1; j < n; ++j) {
        state.apply_phase_factors(factors);
        state.apply_x(j);
        state.apply_swap(j, j + 1);
    }
    state.apply_phase_factors(factors);
    return {std::move(state), n};
}

template <class State>
NonlocalProtocolResult<State> run_nonlocal_protocol(const PhaseConfig& phases, WMethod method,
                                                    BeamSplitter splitter) {
    State w = prepare_w_state<State>(phases.size(), method, splitter);
    State evolved = w;
    evolved.apply_plate_phases(phases);
    return {std::move(evolved), std::move(w)};
}

OutcomeProbabilities project_local(const LocalProtocolResult<QubitRegisterState>& result) {
    const QubitRegisterState& s = result.final_state;
    const std::uint64_t mask = s.mode_mask(result.photon_mode_of_interest);
    const auto amps = s.amplitudes();
    OutcomeProbabilities out;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (k & mask) {
            continue;
        }
        const Complex zero = amps[k];
        const Complex one = amps[k | mask];
        out.p_s += 0.5 * std::norm(zero + one);
        out.p_d += 0.5 * std::norm(zero - one);
    }
    return out;
}

OutcomeProbabilities project_local(const LocalProtocolResult<ExcitationState>& result) {
    const ExcitationState& s = result.final_state;
    const std::size_t target = result.photon_mode_of_interest;
    const Complex zero = s.vacuum_amp();
    const Complex one = s.mode_amp(target);
    OutcomeProbabilities out{0.5 * std::norm(zero + one), 0.5 * std::norm(zero - one)};
    // A photon elsewhere leaves the target in |0>, which splits evenly over |+> and |->.
    for (std::size_t mode = 1; mode <= s.num_modes(); ++mode) {
        if (mode != target) {
            const double p = std::norm(s.mode_amp(mode));
            out.p_s += 0.5 * p;
            out.p_d += 0.5 * p;
        }
    }
    return out;
}

OutcomeProbabilities project_nonlocal(const NonlocalProtocolResult<QubitRegisterState>& result) {
    const double p_s = std::norm(inner_product(result.w_state, result.final_state));
    return {p_s, result.final_state.norm_squared() - p_s};
}

OutcomeProbabilities project_nonlocal(const NonlocalProtocolResult<ExcitationState>& result) {
    const double p_s = std::norm(inner_product(result.w_state, result.final_state));
    return {p_s, result.final_state.norm_squared() - p_s};
}

template QubitRegisterState prepare_local_initial<QubitRegisterState>(std::size_t);
template ExcitationState prepare_local_initial<ExcitationState>(std::size_t);
template QubitRegisterState prepare_w_state<QubitRegisterState>(std::size_t, WMethod, BeamSplitter);
template ExcitationState prepare_w_state<ExcitationState>(std::size_t, WMethod, BeamSplitter);
template LocalProtocolResult<QubitRegisterState> run_local_protocol<QubitRegisterState>(const PhaseConfig&);
template LocalProtocolResult<ExcitationState> run_local_protocol<ExcitationState>(const PhaseConfig&);
template NonlocalProtocolResult<QubitRegisterState> run_nonlocal_protocol<QubitRegisterState>(const PhaseConfig&,
                                                                                              WMethod,
                                                                                              BeamSplitter);
template NonlocalProtocolResult<ExcitationState> run_nonlocal_protocol<ExcitationState>(const PhaseConfig&,
                                                                                        WMethod, BeamSplitter);

}  // namespace qsn
