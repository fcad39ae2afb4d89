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

#include "qsn/excitation_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsn {

ExcitationState ExcitationState::vacuum(std::size_t num_modes) {
    if (num_modes < 1) {
        throw std::invalid_argument("ExcitationState: need at least one mode");
    }
    return {1.0, std::vector<Complex>(num_modes)};
}

ExcitationState ExcitationState::photon_in(std::size_t num_modes, std::size_t mode) {
    ExcitationState s = vacuum(num_modes);
    s.check_mode(mode);
    s.vacuum_amp_ = 0.0;
    s.mode_amps_[mode - 1] = 1.0;
    return s;
}

ExcitationState ExcitationState::from_amplitudes(Complex vacuum_amp, std::vector<Complex> mode_amps) {
    if (mode_amps.empty()) {
        throw std::invalid_argument("ExcitationState: need at least one mode");
    }
    return {vacuum_amp, std::move(mode_amps)};
}

Complex ExcitationState::mode_amp(std::size_t mode) const {
    check_mode(mode);
    return mode_amps_[mode - 1];
}

double ExcitationState::norm_squared() const noexcept {
    double total = std::norm(vacuum_amp_);
    for (const Complex& a : mode_amps_) {
        total += std::norm(a);
    }
    return total;
}

void ExcitationState::check_mode(std::size_t mode) const {
    if (mode < 1 || mode > mode_amps_.size()) {
        throw std::invalid_argument("mode " + std::to_string(mode) + " out of range [1, " +
                                    std::to_string(mode_amps_.size()) + "]");
    }
}

void ExcitationState::check_mode_pair(std::size_t mode_a, std::size_t mode_b) const {
    check_mode(mode_a);
    check_mode(mode_b);
    if (mode_a == mode_b) {
        throw std::invalid_argument("two-mode operation needs distinct modes, got " + std::to_string(mode_a) +
                                    " twice");
    }
}

void ExcitationState::apply_mode_phase(std::size_t mode, double theta) {
    check_mode(mode);
    mode_amps_[mode - 1] *= std::polar(1.0, -theta);
}

void ExcitationState::apply_plate_phases(const PhaseConfig& phases) {
    const std::vector<Complex> factors = phases.phase_factors();
    apply_phase_factors(factors);
}

void ExcitationState::apply_phase_factors(std::span<const Complex> factors) {
    if (factors.size() != mode_amps_.size()) {
        throw std::invalid_argument("plate phases: " + std::to_string(factors.size()) +
                                    " plates for a state of " + std::to_string(mode_amps_.size()) + " modes");
    }
    for (std::size_t k = 0; k < mode_amps_.size(); ++k) {
        mode_amps_[k] *= factors[k];
    }
}

void ExcitationState::apply_x(std::size_t mode) {
    check_mode(mode);
    for (std::size_t k = 0; k < mode_amps_.size(); ++k) {
        if (k + 1 != mode && std::abs(mode_amps_[k]) > kSectorTolerance) {
            throw std::domain_error("bit-flip would create two photons: flipping mode " + std::to_string(mode) +
                                    " while mode " + std::to_string(k + 1) + " is occupied");
        }
    }
    std::swap(vacuum_amp_, mode_amps_[mode - 1]);
}

void ExcitationState::apply_swap(std::size_t mode_a, std::size_t mode_b) {
    check_mode_pair(mode_a, mode_b);
    std::swap(mode_amps_[mode_a - 1], mode_amps_[mode_b - 1]);
}

void ExcitationState::apply_beamsplitter(std::size_t mode_a, std::size_t mode_b, BeamSplitter splitter) {
    check_mode_pair(mode_a, mode_b);
    const double c = std::cos(splitter.mixing_angle);
    const double s = std::sin(splitter.mixing_angle);
    const Complex in_a = mode_amps_[mode_a - 1];
    const Complex in_b = mode_amps_[mode_b - 1];
    mode_amps_[mode_a - 1] = c * in_a + s * in_b;
    mode_amps_[mode_b - 1] = s * in_a - c * in_b;
}

Complex inner_product(const ExcitationState& a, const ExcitationState& b) {
    if (a.num_modes() != b.num_modes()) {
        throw std::invalid_argument("inner_product: states have " + std::to_string(a.num_modes()) + " and " +
                                    std::to_string(b.num_modes()) + " modes");
    }
    Complex total = std::conj(a.vacuum_amp()) * b.vacuum_amp();
    const auto lhs = a.mode_amps();
    const auto rhs = b.mode_amps();
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        total += std::conj(lhs[k]) * rhs[k];
    }
    return total;
}

QubitRegisterState lift_to_dense(const ExcitationState& state) {
    const std::size_t n = state.num_modes();
    if (n > kMaxDenseModes) {
        throw std::invalid_argument("lift_to_dense: " + std::to_string(n) + " modes exceeds the dense cap of " +
                                    std::to_string(kMaxDenseModes));
    }
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[0] = state.vacuum_amp();
    for (std::size_t mode = 1; mode <= n; ++mode) {
        amps[one_hot_index(n, mode)] = state.mode_amps()[mode - 1];
    }
    return QubitRegisterState::from_amplitudes(n, std::move(amps));
}

}  // namespace qsn
