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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsn/montecarlo.hpp"

namespace qsn::cli {

/// Shortest-safe text for a double: 17 significant digits, so values
/// round-trip exactly.
std::string format_double(double value);

/// Column order of sweep output; fixed.
inline constexpr const char* kSweepHeader =
    "case,strategy,N,trials,M,seed,backend,mean_perr,std_error,analytic_perr";

void write_sweep_csv(std::ostream& out, const SamplingPlan& plan, const std::vector<TrialAggregate>& rows);

nlohmann::json sweep_json(const SamplingPlan& plan, const std::vector<TrialAggregate>& rows);

inline constexpr const char* kAnalyticHeader = "case,strategy,N,M,analytic_perr,approx";

struct AnalyticRow {
    Case which;
    Strategy strategy;
    std::size_t n;
    std::optional<long long> m;
    AnalyticMean mean;
};

void write_analytic_csv(std::ostream& out, const std::vector<AnalyticRow>& rows);

}  // namespace qsn::cli
