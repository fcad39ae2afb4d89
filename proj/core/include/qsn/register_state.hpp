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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsn/phase_config.hpp"

namespace qsn {

/// Largest register the dense simulator will allocate (2^20 amplitudes).
inline constexpr std::size_t kMaxDenseModes = 20;

/// Amplitudes below this modulus count as zero when checking sector constraints.
inline constexpr double kSectorTolerance = 1e-12;

/// Lossless two-mode splitter acting on the single-photon pair {|1_a 0_b>, |0_a 1_b>}:
///
///   new_10 = cos(chi) old_10 + sin(chi) old_01
///   new_01 = sin(chi) old_10 - cos(chi) old_01
///
/// The default chi = pi/4 is the real orthogonal 50/50 splitter.
struct BeamSplitter {
    double mixing_angle = kPi / 4;
};

/// Dense state of N single-rail modes: 2^N complex amplitudes.
///
/// Basis index convention: mode 1 is the most significant bit, so the ket
/// |b_1 b_2 ... b_N> has index sum_j b_j 2^(N-j). Mode arguments are 1-based.
class QubitRegisterState {
  public:
    /// All modes empty, |0...0>.
    static QubitRegisterState vacuum(std::size_t num_modes);

    /// Computational basis ket written as a bit string, e.g. "0110".
    static QubitRegisterState basis(std::string_view bits);

    static QubitRegisterState from_amplitudes(std::size_t num_modes, std::vector<Complex> amplitudes);

    std::size_t num_modes() const noexcept { return num_modes_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
    Complex amplitude(std::string_view bits) const;

    /// Bit of the basis index that encodes the occupation of `mode`.
    std::uint64_t mode_mask(std::size_t mode) const;

    double norm_squared() const noexcept;

    /// exp(-i theta (1 + sigma_z)/2) on one mode.
    void apply_mode_phase(std::size_t mode, double theta);

    /// Free evolution exp(-iHt) through all plates at once.
    void apply_plate_phases(const PhaseConfig& phases);

    /// Same as apply_plate_phases with precomputed factors e^{-i theta_j}
    /// (index 0 is plate 1), for circuits that evolve repeatedly.
    void apply_phase_factors(std::span<const Complex> factors);

    void apply_x(std::size_t mode);
    void apply_swap(std::size_t mode_a, std::size_t mode_b);

    /// Throws std::domain_error if any basis state with both modes occupied
    /// carries amplitude above kSectorTolerance.
    void apply_beamsplitter(std::size_t mode_a, std::size_t mode_b, BeamSplitter splitter = {});

  private:
    QubitRegisterState(std::size_t num_modes, std::vector<Complex> amplitudes)
        : num_modes_(num_modes), amplitudes_(std::move(amplitudes)) {}

    void check_mode(std::size_t mode) const;
    void check_mode_pair(std::size_t mode_a, std::size_t mode_b) const;

    std::size_t num_modes_ = 0;
    std::vector<Complex> amplitudes_;
};

/// <a|b> = sum_k conj(a_k) b_k.
Complex inner_product(const QubitRegisterState& a, const QubitRegisterState& b);

/// Index of the ket with a single photon in `mode` and every other mode empty.
std::uint64_t one_hot_index(std::size_t num_modes, std::size_t mode);

std::string to_bit_string(std::uint64_t index, std::size_t num_modes);

}  // namespace qsn
