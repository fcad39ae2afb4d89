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
#include <string_view>
#include <vector>

namespace qsn::cli {

/// Parses a list of plate counts. Items are separated by commas; each item is
/// either an integer or an inclusive range start:end:step (end is included
/// only when the stepping lands on it exactly). Throws std::invalid_argument.
///
///   "2,4,8"          -> 2 4 8
///   "2:10:2"         -> 2 4 6 8 10
///   "2:9:2"          -> 2 4 6 8
///   "2,100:300:100"  -> 2 100 200 300
std::vector<std::size_t> parse_n_list(std::string_view text);

}  // namespace qsn::cli
