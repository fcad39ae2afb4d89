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

#include "n_list.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace qsn::cli {

namespace {

std::size_t parse_count(std::string_view token, std::string_view whole) {
    std::size_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
        throw std::invalid_argument("bad N list \"" + std::string(whole) + "\": \"" + std::string(token) +
                                    "\" is not a nonnegative integer");
    }
    return value;
}

}  // namespace

std::vector<std::size_t> parse_n_list(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = text.substr(pos, comma - pos);
        const std::size_t c1 = item.find(':');
        if (c1 == std::string_view::npos) {
            out.push_back(parse_count(item, text));
        } else {
            const std::size_t c2 = item.find(':', c1 + 1);
            if (c2 == std::string_view::npos || item.find(':', c2 + 1) != std::string_view::npos) {
                throw std::invalid_argument("bad N range \"" + std::string(item) + "\": expected start:end:step");
            }
            const std::size_t start = parse_count(item.substr(0, c1), text);
            const std::size_t end = parse_count(item.substr(c1 + 1, c2 - c1 - 1), text);
            const std::size_t step = parse_count(item.substr(c2 + 1), text);
            if (step == 0) {
                throw std::invalid_argument("bad N range \"" + std::string(item) + "\": step must be positive");
            }
            if (start > end) {
                throw std::invalid_argument("bad N range \"" + std::string(item) + "\": start exceeds end");
            }
            for (std::size_t v = start; v <= end; v += step) {
                out.push_back(v);
            }
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace qsn::cli
