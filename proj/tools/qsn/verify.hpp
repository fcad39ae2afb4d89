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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qsn::cli {

/// Deliberate defects used to prove that verification can fail.
enum class Fault {
    none,
    unbalanced_splitter,  // compact back end uses a 0.1 rad mis-set splitter
};

std::string_view to_string(Fault fault);
Fault parse_fault(std::string_view text);

struct VerifyOptions {
    std::size_t n_max = 8;
    std::size_t draws = 1000;
    std::uint64_t seed = 0;
    Fault fault = Fault::none;
};

/// One line of the verification table: a check evaluated at one N.
struct CheckRow {
    std::string check;
    std::size_t n = 0;
    std::size_t draws = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    std::string note;
};

struct VerifyFailure {
    std::string check;
    std::size_t n = 0;
    std::size_t draw = 0;
    std::string detail;
    nlohmann::json replay;  // self-contained input for replay_check
};

struct VerifyReport {
    std::vector<CheckRow> rows;
    std::optional<VerifyFailure> first_failure;

    bool passed() const noexcept { return !first_failure; }
};

/// Runs every check for N = 1..n_max:
///   w-cascade        cascade W state has one-hot moduli 1/sqrt(N), no vacuum
///   ops-equivalence  compact ops match dense ops on lifted random states
///   local-paths      dense circuit, compact circuit and closed form agree on
///                    p_S, p_D and P_err (cases a and b), and the output qubit
///                    matches the alternating-phase closed form
///   nonlocal-paths   same for the W-state protocol
///   same-branch-zero identical phases never trigger the Different projector
///   local-odd-n      odd N is rejected with an argument error
VerifyReport run_verification(const VerifyOptions& options);

/// Re-evaluates the single failing draw recorded in `replay`.
VerifyReport replay_check(const nlohmann::json& replay);

void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace qsn::cli
