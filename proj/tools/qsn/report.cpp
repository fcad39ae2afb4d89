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

#include "report.hpp"

#include <cstdio>

namespace qsn::cli {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string m_field(const std::optional<long long>& m, Case which) {
    if (which == Case::same_vs_different || !m) {
        return "";
    }
    return std::to_string(*m);
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SamplingPlan& plan, const std::vector<TrialAggregate>& rows) {
    out << kSweepHeader << '\n';
    for (const TrialAggregate& r : rows) {
        out << to_string(r.which) << ',' << to_string(r.strategy) << ',' << r.n << ',' << r.trials << ','
            << m_field(plan.m, r.which) << ',' << plan.seed << ',' << to_string(plan.backend) << ','
            << format_double(r.mean_perr) << ',' << format_double(r.std_error) << ','
            << format_double(r.analytic.value) << '\n';
    }
}

nlohmann::json sweep_json(const SamplingPlan& plan, const std::vector<TrialAggregate>& rows) {
    nlohmann::json meta = {
        {"rng", std::string(kRngAlgorithm)},
        {"case", std::string(to_string(plan.which))},
        {"strategy", std::string(to_string(plan.strategy))},
        {"trials", plan.trials},
        {"seed", plan.seed},
        {"backend", std::string(to_string(plan.backend))},
        {"interaction_time", plan.interaction_time},
        {"std_error", "unbiased sample std / sqrt(trials)"},
    };
    meta["M"] = plan.which == Case::similar_vs_different && plan.m ? nlohmann::json(*plan.m) : nlohmann::json();
    nlohmann::json out_rows = nlohmann::json::array();
    for (const TrialAggregate& r : rows) {
        out_rows.push_back({
            {"case", std::string(to_string(r.which))},
            {"strategy", std::string(to_string(r.strategy))},
            {"N", r.n},
            {"trials", r.trials},
            {"mean_perr", r.mean_perr},
            {"std_error", r.std_error},
            {"analytic_perr", r.analytic.value},
            {"analytic_accuracy", std::string(to_string(r.analytic.accuracy))},
        });
    }
    return {{"metadata", meta}, {"rows", out_rows}};
}

void write_analytic_csv(std::ostream& out, const std::vector<AnalyticRow>& rows) {
    out << kAnalyticHeader << '\n';
    for (const AnalyticRow& r : rows) {
        out << to_string(r.which) << ',' << to_string(r.strategy) << ',' << r.n << ',' << m_field(r.m, r.which)
            << ',' << format_double(r.mean.value) << ',' << to_string(r.mean.accuracy) << '\n';
    }
}

}  // namespace qsn::cli
