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

#include "qsn/rng.hpp"

#include <cmath>

namespace qsn {

std::uint64_t derive_key(std::initializer_list<std::uint64_t> words) noexcept {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    std::uint64_t position = 0;
    for (std::uint64_t w : words) {
        ++position;
        h = splitmix64_mix(h ^ splitmix64_mix(w + position * CounterRng::kGamma));
    }
    return h;
}

double CounterRng::uniform(double lo, double hi) noexcept {
    const double x = lo + (hi - lo) * uniform01();
    return x < hi ? x : std::nextafter(hi, lo);
}

}  // namespace qsn
