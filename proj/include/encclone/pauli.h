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

#ifndef ENCCLONE_PAULI_H
#define ENCCLONE_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "encclone/dense_matrix.h"
#include "encclone/types.h"

namespace encclone {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
DenseMatrix pauli_matrix(Pauli p);

/// Tensor product of single-qubit Paulis times a nonzero coefficient.
/// `ops[q]` acts on qubit q. The text form lists qubit 0 first, e.g. "XZI"
/// means X on qubit 0 and Z on qubit 1; an optional "+", "-", "i" or "-i"
/// prefix sets the coefficient.
struct PauliString {
    std::vector<Pauli> ops;
    cplx coeff{1.0, 0.0};

    PauliString() = default;
    explicit PauliString(std::size_t num_qubits) : ops(num_qubits, Pauli::I) {
    }

    static PauliString parse(std::string_view text);
    static PauliString sparse(std::size_t num_qubits, std::vector<std::pair<Qubit, Pauli>> terms);

    std::size_t size() const {
        return ops.size();
    }
    std::size_t weight() const;
    bool commutes_with(const PauliString &other) const;
    std::string str() const;

    /// Dense 2^n x 2^n matrix, qubit 0 least significant.
    DenseMatrix matrix() const;
};

}  // namespace encclone

#endif
