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

#ifndef ENCCLONE_TYPES_H
#define ENCCLONE_TYPES_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace encclone {

using cplx = std::complex<double>;

/// Qubit index. Qubit 0 is the least significant bit of a basis-state index.
using Qubit = std::uint32_t;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

/// Default statevector capacity (2^26 complex doubles, 1 GiB).
inline constexpr std::size_t kDefaultMaxStatevectorQubits = 26;
/// Default density-matrix capacity (a 13-qubit density matrix is the same size).
inline constexpr std::size_t kDefaultMaxDensityQubits = 13;
/// Tableau register limit.
inline constexpr std::size_t kMaxTableauQubits = 1024;

}  // namespace encclone

#endif
