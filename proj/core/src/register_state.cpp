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

#include "qsn/register_state.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsn {

namespace {

void check_num_modes(std::size_t num_modes) {
    if (num_modes < 1) {
        throw std::invalid_argument("QubitRegisterState: need at least one mode");
    }
    if (num_modes > kMaxDenseModes) {
        throw std::invalid_argument("QubitRegisterState: " + std::to_string(num_modes) +
                                    " modes exceeds the dense cap of " + std::to_string(kMaxDenseModes) +
                                    "; use ExcitationState");
    }
}

std::uint64_t parse_bits(std::string_view bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("expected only '0'/'1' in bit string \"" + std::string(bits) + "\"");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

}  // namespace

QubitRegisterState QubitRegisterState::vacuum(std::size_t num_modes) {
    check_num_modes(num_modes);
    std::vector<Complex> amps(std::size_t{1} << num_modes);
    amps[0] = 1.0;
    return {num_modes, std::move(amps)};
}

QubitRegisterState QubitRegisterState::basis(std::string_view bits) {
    check_num_modes(bits.size());
    std::vector<Complex> amps(std::size_t{1} << bits.size());
    amps[parse_bits(bits)] = 1.0;
    return {bits.size(), std::move(amps)};
}

QubitRegisterState QubitRegisterState::from_amplitudes(std::size_t num_modes, std::vector<Complex> amplitudes) {
    check_num_modes(num_modes);
    if (amplitudes.size() != (std::size_t{1} << num_modes)) {
        throw std::invalid_argument("QubitRegisterState: expected " +
                                    std::to_string(std::size_t{1} << num_modes) + " amplitudes, got " +
                                    std::to_string(amplitudes.size()));
    }
    return {num_modes, std::move(amplitudes)};
}

Complex QubitRegisterState::amplitude(std::string_view bits) const {
    if (bits.size() != num_modes_) {
        throw std::invalid_argument("QubitRegisterState::amplitude: bit string length mismatch");
    }
    return amplitudes_[parse_bits(bits)];
}

std::uint64_t QubitRegisterState::mode_mask(std::size_t mode) const {
    check_mode(mode);
    return std::uint64_t{1} << (num_modes_ - mode);
}

double QubitRegisterState::norm_squared() const noexcept {
    double total = 0.0;
    for (const Complex& a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void QubitRegisterState::check_mode(std::size_t mode) const {
    if (mode < 1 || mode > num_modes_) {
        throw std::invalid_argument("mode " + std::to_string(mode) + " out of range [1, " +
                                    std::to_string(num_modes_) + "]");
    }
}

void QubitRegisterState::check_mode_pair(std::size_t mode_a, std::size_t mode_b) const {
    check_mode(mode_a);
    check_mode(mode_b);
    if (mode_a == mode_b) {
        throw std::invalid_argument("two-mode operation needs distinct modes, got " + std::to_string(mode_a) +
                                    " twice");
    }
}

void QubitRegisterState::apply_mode_phase(std::size_t mode, double theta) {
    const std::uint64_t mask = mode_mask(mode);
    const Complex factor = std::polar(1.0, -theta);
    for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        if (k & mask) {
            amplitudes_[k] *= factor;
        }
    }
}

void QubitRegisterState::apply_plate_phases(const PhaseConfig& phases) {
    const std::vector<Complex> factors = phases.phase_factors();
    apply_phase_factors(factors);
}

void QubitRegisterState::apply_phase_factors(std::span<const Complex> factors) {
    if (factors.size() != num_modes_) {
        throw std::invalid_argument("plate phases: " + std::to_string(factors.size()) +
                                    " plates for a register of " + std::to_string(num_modes_) + " modes");
    }
    for (std::uint64_t k = 1; k < amplitudes_.size(); ++k) {
        Complex f = 1.0;
        for (std::size_t mode = 1; mode <= num_modes_; ++mode) {
            if (k & (std::uint64_t{1} << (num_modes_ - mode))) {
                f *= factors[mode - 1];
            }
        }
        amplitudes_[k] *= f;
    }
}

void QubitRegisterState::apply_x(std::size_t mode) {
    const std::uint64_t mask = mode_mask(mode);
    for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        if (!(k & mask)) {
            std::swap(amplitudes_[k], amplitudes_[k | mask]);
        }
    }
}

void QubitRegisterState::apply_swap(std::size_t mode_a, std::size_t mode_b) {
    check_mode_pair(mode_a, mode_b);
    const std::uint64_t ma = mode_mask(mode_a);
    const std::uint64_t mb = mode_mask(mode_b);
    for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        // Visit each {1_a 0_b, 0_a 1_b} pair once, from its 1_a 0_b member.
        if ((k & ma) && !(k & mb)) {
            std::swap(amplitudes_[k], amplitudes_[(k & ~ma) | mb]);
        }
    }
}

void QubitRegisterState::apply_beamsplitter(std::size_t mode_a, std::size_t mode_b, BeamSplitter splitter) {
    check_mode_pair(mode_a, mode_b);
    const std::uint64_t ma = mode_mask(mode_a);
    const std::uint64_t mb = mode_mask(mode_b);
    for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        if ((k & ma) && (k & mb) && std::abs(amplitudes_[k]) > kSectorTolerance) {
            throw std::domain_error("beam splitter outside single-photon sector: modes " +
                                    std::to_string(mode_a) + " and " + std::to_string(mode_b) +
                                    " both occupied in |" + to_bit_string(k, num_modes_) + ">");
        }
    }
    const double c = std::cos(splitter.mixing_angle);
    const double s = std::sin(splitter.mixing_angle);
    for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        if ((k & ma) && !(k & mb)) {
            const std::uint64_t partner = (k & ~ma) | mb;
            const Complex in_a = amplitudes_[k];
            const Complex in_b = amplitudes_[partner];
            amplitudes_[k] = c * in_a + s * in_b;
            amplitudes_[partner] = s * in_a - c * in_b;
        }
    }
}

Complex inner_product(const QubitRegisterState& a, const QubitRegisterState& b) {
    if (a.num_modes() != b.num_modes()) {
        throw std::invalid_argument("inner_product: registers have " + std::to_string(a.num_modes()) + " and " +
                                    std::to_string(b.num_modes()) + " modes");
    }
    Complex total = 0.0;
    const auto lhs = a.amplitudes();
    const auto rhs = b.amplitudes();
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        total += std::conj(lhs[k]) * rhs[k];
    }
    return total;
}

std::uint64_t one_hot_index(std::size_t num_modes, std::size_t mode) {
    if (mode < 1 || mode > num_modes) {
        throw std::invalid_argument("one_hot_index: mode " + std::to_string(mode) + " out of range");
    }
    return std::uint64_t{1} << (num_modes - mode);
}

std::string to_bit_string(std::uint64_t index, std::size_t num_modes) {
    std::string bits(num_modes, '0');
    for (std::size_t mode = 1; mode <= num_modes; ++mode) {
        if (index & (std::uint64_t{1} << (num_modes - mode))) {
            bits[mode - 1] = '1';
        }
    }
    return bits;
}

}  // namespace qsn
