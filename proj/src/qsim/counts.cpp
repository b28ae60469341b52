// Copyright 2026 The encclone Authors
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

#include "encclone/counts.h"

#include "encclone/error.h"

namespace encclone {

std::string CountsTable::key_for(std::uint64_t outcome, std::size_t num_bits) {
    std::string key(num_bits, '0');
    for (std::size_t i = 0; i < num_bits; ++i) {
        if ((outcome >> i) & 1) {
            key[num_bits - 1 - i] = '1';
        }
    }
    return key;
}

void CountsTable::add(std::uint64_t outcome, std::uint64_t times) {
    counts[key_for(outcome, num_bits)] += times;
    total_shots += times;
}

std::uint64_t CountsTable::count(std::string_view key) const {
    auto it = counts.find(std::string(key));
    return it == counts.end() ? 0 : it->second;
}

double CountsTable::frequency(std::string_view key) const {
    if (total_shots == 0) {
        throw InvalidArgument("CountsTable: no shots recorded");
    }
    return static_cast<double>(count(key)) / static_cast<double>(total_shots);
}

void CountsTable::validate() const {
    std::uint64_t sum = 0;
    for (const auto &[key, c] : counts) {
        if (key.size() != num_bits) {
            throw InvalidArgument("CountsTable: key '" + key + "' has the wrong length");
        }
        sum += c;
    }
    if (sum != total_shots) {
        throw InvalidArgument("CountsTable: counts do not sum to total_shots");
    }
}

}  // namespace encclone
