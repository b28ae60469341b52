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

#include "encclone/pauli.h"

#include <algorithm>

#include "encclone/error.h"

namespace encclone {

char pauli_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

DenseMatrix pauli_matrix(Pauli p) {
    const cplx i{0.0, 1.0};
    switch (p) {
        case Pauli::I:
            return DenseMatrix(2, 2, {1, 0, 0, 1});
        case Pauli::X:
            return DenseMatrix(2, 2, {0, 1, 1, 0});
        case Pauli::Y:
            return DenseMatrix(2, 2, {0, -i, i, 0});
        case Pauli::Z:
            return DenseMatrix(2, 2, {1, 0, 0, -1});
    }
    return {};
}

PauliString PauliString::parse(std::string_view text) {
    PauliString p;
    if (text.starts_with("-i")) {
        p.coeff = {0.0, -1.0};
        text.remove_prefix(2);
    } else if (text.starts_with("+i")) {
        p.coeff = {0.0, 1.0};
        text.remove_prefix(2);
    } else if (text.starts_with('i')) {
        p.coeff = {0.0, 1.0};
        text.remove_prefix(1);
    } else if (text.starts_with('-')) {
        p.coeff = -1.0;
        text.remove_prefix(1);
    } else if (text.starts_with('+')) {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw ParseError("PauliString: empty operator list");
    }
    for (char ch : text) {
        switch (ch) {
            case 'I':
            case '_':
                p.ops.push_back(Pauli::I);
                break;
            case 'X':
                p.ops.push_back(Pauli::X);
                break;
            case 'Y':
                p.ops.push_back(Pauli::Y);
                break;
            case 'Z':
                p.ops.push_back(Pauli::Z);
                break;
            default:
                throw ParseError(std::string("PauliString: unexpected character '") + ch + "'");
        }
    }
    return p;
}

PauliString PauliString::sparse(std::size_t num_qubits, std::vector<std::pair<Qubit, Pauli>> terms) {
    PauliString p(num_qubits);
    for (auto [q, op] : terms) {
        if (q >= num_qubits) {
            throw OutOfRange("PauliString: qubit " + std::to_string(q) + " out of range");
        }
        p.ops[q] = op;
    }
    return p;
}

std::size_t PauliString::weight() const {
    return static_cast<std::size_t>(std::count_if(ops.begin(), ops.end(), [](Pauli p) { return p != Pauli::I; }));
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.size() != size()) {
        throw InvalidArgument("PauliString: length mismatch");
    }
    int anti = 0;
    for (std::size_t q = 0; q < ops.size(); ++q) {
        if (ops[q] != Pauli::I && other.ops[q] != Pauli::I && ops[q] != other.ops[q]) {
            anti ^= 1;
        }
    }
    return anti == 0;
}

std::string PauliString::str() const {
    std::string out;
    if (coeff == cplx{-1.0, 0.0}) {
        out = "-";
    } else if (coeff == cplx{0.0, 1.0}) {
        out = "i";
    } else if (coeff == cplx{0.0, -1.0}) {
        out = "-i";
    } else if (coeff != cplx{1.0, 0.0}) {
        out = "(" + std::to_string(coeff.real()) + "," + std::to_string(coeff.imag()) + ")";
    }
    for (Pauli p : ops) {
        out.push_back(pauli_char(p));
    }
    return out;
}

DenseMatrix PauliString::matrix() const {
    DenseMatrix m = DenseMatrix::identity(1);
    for (std::size_t q = ops.size(); q-- > 0;) {
        m = m.kron(pauli_matrix(ops[q]));
    }
    return m * coeff;
}

}  // namespace encclone
