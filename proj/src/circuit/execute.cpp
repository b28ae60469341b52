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

#include "encclone/execute.h"

#include "encclone/error.h"

namespace encclone {

namespace {

void check_size(std::size_t engine, const Circuit &c) {
    if (engine != c.num_qubits()) {
        throw InvalidArgument("circuit has " + std::to_string(c.num_qubits()) + " qubits but the state has " +
                              std::to_string(engine));
    }
}

}  // namespace

void apply_circuit(StateVector &psi, const Circuit &c) {
    check_size(psi.num_qubits(), c);
    for (const auto &op : c.ops()) {
        psi.apply(op.gate, op.targets());
    }
}

void apply_circuit(DensityMatrix &rho, const Circuit &c) {
    check_size(rho.num_qubits(), c);
    for (const auto &op : c.ops()) {
        rho.apply(op.gate, op.targets());
    }
}

void apply_circuit(Tableau &t, const Circuit &c) {
    check_size(t.num_qubits(), c);
    if (auto bad = c.first_non_clifford()) {
        throw NonCliffordError("non-Clifford gate " + c.ops()[*bad].gate.name() + " at operation " +
                               std::to_string(*bad) + " cannot run on the stabilizer backend");
    }
    for (const auto &op : c.ops()) {
        t.apply(op.gate, op.targets());
    }
}

StateVector run_statevector(const Circuit &c, std::size_t max_qubits) {
    StateVector psi(c.num_qubits(), max_qubits);
    apply_circuit(psi, c);
    return psi;
}

DensityMatrix run_density(const Circuit &c, std::size_t max_qubits) {
    DensityMatrix rho(c.num_qubits(), max_qubits);
    apply_circuit(rho, c);
    return rho;
}

Tableau run_tableau(const Circuit &c) {
    if (auto bad = c.first_non_clifford()) {
        throw NonCliffordError("non-Clifford gate " + c.ops()[*bad].gate.name() + " at operation " +
                               std::to_string(*bad) + " cannot run on the stabilizer backend");
    }
    Tableau t(c.num_qubits());
    apply_circuit(t, c);
    return t;
}

DenseMatrix circuit_unitary(const Circuit &c) {
    if (c.num_qubits() > 12) {
        throw CapacityError("unitary extraction is limited to 12 qubits");
    }
    const std::size_t dim = std::size_t{1} << c.num_qubits();
    DenseMatrix u(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<cplx> amps(dim, 0.0);
        amps[k] = 1.0;
        StateVector psi = StateVector::from_amplitudes(std::move(amps));
        apply_circuit(psi, c);
        auto a = psi.amplitudes();
        for (std::size_t r = 0; r < dim; ++r) {
            u(r, k) = a[r];
        }
    }
    return u;
}

}  // namespace encclone
