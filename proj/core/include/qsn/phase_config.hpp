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

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace qsn {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

/// Phase-plate configuration of an N-plate network.
///
/// Each plate j (1-based) imparts the phase theta_j = omega_j * t on a photon
/// occupying mode j, where omega_j is the plate's phase rate and t the
/// interaction time. With the default t = 1 the rates are the phases.
class PhaseConfig {
  public:
    PhaseConfig() = default;
    explicit PhaseConfig(std::vector<double> rates, double interaction_time = 1.0);

    /// All plates share one rate (the "same phase" ensemble).
    static PhaseConfig uniform(std::size_t num_plates, double rate, double interaction_time = 1.0);

    std::size_t size() const noexcept { return rates_.size(); }
    double interaction_time() const noexcept { return interaction_time_; }
    std::span<const double> rates() const noexcept { return rates_; }

    /// Phase of plate `mode` (1-based).
    double phase(std::size_t mode) const;

    /// theta_1..theta_N as a vector (index 0 is plate 1).
    std::vector<double> phases() const;

    /// e^{-i theta_j} for every plate, index 0 is plate 1.
    std::vector<Complex> phase_factors() const;

  private:
    std::vector<double> rates_;
    double interaction_time_ = 1.0;
};

}  // namespace qsn
