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

#ifndef ENCCLONE_COUNTS_H
#define ENCCLONE_COUNTS_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace encclone {

/// Histogram of measurement outcomes.
///
/// Keys are bitstrings over the measured qubits printed most significant first:
/// the rightmost character is the first measured qubit, so the key read as a
/// binary number equals the outcome index with measured[0] as bit 0.
struct CountsTable {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total_shots = 0;
    std::uint64_t seed = 0;
    std::size_t num_bits = 0;

    void add(std::uint64_t outcome, std::uint64_t times = 1);
    std::uint64_t count(std::string_view key) const;
    double frequency(std::string_view key) const;
    /// Throws when counts do not sum to total_shots or a key has the wrong length.
    void validate() const;

    static std::string key_for(std::uint64_t outcome, std::size_t num_bits);
};

}  // namespace encclone

#endif
