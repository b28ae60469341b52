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

#ifndef ENCCLONE_EXECUTE_H
#define ENCCLONE_EXECUTE_H

#include "encclone/circuit.h"
#include "encclone/dense_matrix.h"
#include "encclone/density_matrix.h"
#include "encclone/statevector.h"
#include "encclone/tableau.h"

namespace encclone {

/// Noiseless runs from |0...0>. MEASURE and IDLE leave the state untouched.
StateVector run_statevector(const Circuit &c, std::size_t max_qubits = kDefaultMaxStatevectorQubits);
DensityMatrix run_density(const Circuit &c, std::size_t max_qubits = kDefaultMaxDensityQubits);
/// Throws NonCliffordError naming the first offending gate.
Tableau run_tableau(const Circuit &c);

void apply_circuit(StateVector &psi, const Circuit &c);
void apply_circuit(DensityMatrix &rho, const Circuit &c);
void apply_circuit(Tableau &t, const Circuit &c);

/// Full unitary, column k = circuit applied to |k>. Capped at 12 qubits.
DenseMatrix circuit_unitary(const Circuit &c);

}  // namespace encclone

#endif
