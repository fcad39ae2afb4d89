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
#include <span>
#include <vector>

#include "qsn/phase_config.hpp"
#include "qsn/register_state.hpp"

namespace qsn {

/// State restricted to span{vacuum, photon in mode j}: N + 1 amplitudes.
///
/// Exposes the same operation set as QubitRegisterState so circuits can be
/// written once against either back end. Every operation is O(N) in time and
/// memory. Mode arguments are 1-based.
class ExcitationState {
  public:
    static ExcitationState vacuum(std::size_t num_modes);

    /// Single photon in `mode`, every other mode empty.
    static ExcitationState photon_in(std::size_t num_modes, std::size_t mode);

    static ExcitationState from_amplitudes(Complex vacuum_amp, std::vector<Complex> mode_amps);

    std::size_t num_modes() const noexcept { return mode_amps_.size(); }
    Complex vacuum_amp() const noexcept { return vacuum_amp_; }
    std::span<const Complex> mode_amps() const noexcept { return mode_amps_; }
    Complex mode_amp(std::size_t mode) const;

    double norm_squared() const noexcept;

    void apply_mode_phase(std::size_t mode, double theta);
    void apply_plate_phases(const PhaseConfig& phases);

    /// Same as apply_plate_phases with precomputed factors e^{-i theta_j}
    /// (index 0 is plate 1), for circuits that evolve repeatedly.
    void apply_phase_factors(std::span<const Complex> factors);

    /// Bit flip on `mode`. Only defined while the state has support on
    /// {vacuum, photon in `mode`}; anything else would create two photons and
    /// raises std::domain_error.
    void apply_x(std::size_t mode);

    void apply_swap(std::size_t mode_a, std::size_t mode_b);
    void apply_beamsplitter(std::size_t mode_a, std::size_t mode_b, BeamSplitter splitter = {});

  private:
    ExcitationState(Complex vacuum_amp, std::vector<Complex> mode_amps)
        : vacuum_amp_(vacuum_amp), mode_amps_(std::move(mode_amps)) {}

    void check_mode(std::size_t mode) const;
    void check_mode_pair(std::size_t mode_a, std::size_t mode_b) const;

    Complex vacuum_amp_ = 0.0;
    std::vector<Complex> mode_amps_;
};

Complex inner_product(const ExcitationState& a, const ExcitationState& b);

/// Embeds the compact state into the dense register (N <= kMaxDenseModes).
QubitRegisterState lift_to_dense(const ExcitationState& state);

}  // namespace qsn
