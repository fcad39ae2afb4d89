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

#include "qsn/phase_config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsn {

PhaseConfig::PhaseConfig(std::vector<double> rates, double interaction_time)
    : rates_(std::move(rates)), interaction_time_(interaction_time) {
    if (!std::isfinite(interaction_time_)) {
        throw std::invalid_argument("PhaseConfig: interaction time must be finite");
    }
    for (std::size_t k = 0; k < rates_.size(); ++k) {
        if (!std::isfinite(rates_[k])) {
            throw std::invalid_argument("PhaseConfig: rate of plate " + std::to_string(k + 1) +
                                        " is not finite");
        }
    }
}

PhaseConfig PhaseConfig::uniform(std::size_t num_plates, double rate, double interaction_time) {
    return PhaseConfig(std::vector<double>(num_plates, rate), interaction_time);
}

double PhaseConfig::phase(std::size_t mode) const {
    if (mode < 1 || mode > rates_.size()) {
        throw std::invalid_argument("PhaseConfig: plate " + std::to_string(mode) + " out of range [1, " +
                                    std::to_string(rates_.size()) + "]");
    }
    return rates_[mode - 1] * interaction_time_;
}

std::vector<double> PhaseConfig::phases() const {
    std::vector<double> out(rates_.size());
    for (std::size_t k = 0; k < rates_.size(); ++k) {
        out[k] = rates_[k] * interaction_time_;
    }
    return out;
}

std::vector<Complex> PhaseConfig::phase_factors() const {
    std::vector<Complex> out(rates_.size());
    for (std::size_t k = 0; k < rates_.size(); ++k) {
        out[k] = std::polar(1.0, -rates_[k] * interaction_time_);
    }
    return out;
}

}  // namespace qsn
