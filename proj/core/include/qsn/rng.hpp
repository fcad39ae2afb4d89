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

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace qsn {

/// Identifier written into run metadata so a result can be traced to the
/// exact generator that produced it.
inline constexpr std::string_view kRngAlgorithm = "splitmix64-ctr/v1";

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Hashes an ordered tuple of words into a stream key. Distinct tuples give
/// unrelated keys, so every (seed, case, strategy, N, trial) gets its own stream.
std::uint64_t derive_key(std::initializer_list<std::uint64_t> words) noexcept;

/// Counter-based SplitMix64: draw i of a stream is mix(key + (i + 1) * gamma).
/// Cheap to construct and fully determined by (key, position), which makes
/// per-trial streams independent of scheduling.
class CounterRng {
  public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    std::uint64_t key() const noexcept { return key_; }
    std::uint64_t position() const noexcept { return counter_; }

    std::uint64_t next_u64() noexcept {
        ++counter_;
        return splitmix64_mix(key_ + counter_ * kGamma);
    }

    /// 53-bit uniform on [0, 1).
    double uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi); never returns hi.
    double uniform(double lo, double hi) noexcept;

    /// Independent child stream, e.g. one per plate branch of a trial.
    CounterRng substream(std::uint64_t index) const noexcept { return CounterRng(derive_key({key_, index})); }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace qsn
