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

#include <ostream>
#include <string>
#include <vector>

namespace qsn::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // I/O failure or failed verification
    kExitUsage = 2,    // bad flags
};

/// Worker count for a sweep: `requested` (0 = all hardware threads), capped
/// by the QSN_THREADS value in `env_cap` when that is a positive integer.
unsigned resolve_threads(unsigned requested, const char* env_cap);

/// Entry point shared by main() and the tests. `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsn::cli
