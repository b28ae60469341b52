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

#ifndef ENCCLONE_ORACLES_H
#define ENCCLONE_ORACLES_H

#include <cstddef>

#include "encclone/dense_matrix.h"

namespace encclone {

/// Dense reference operators built directly from their defining formulas, never
/// from circuits. Qubit 0 is the least significant index bit throughout.

/// exp(-i pi/4 X..X) exp(-i pi/4 Z..Z) on n + 1 qubits (A = qubit 0, S_i = i),
/// each factor as (I - i P)/sqrt(2).
DenseMatrix dense_u_enc(std::size_t n);

/// Decryption on S_j (qubit 0) and N_1..N_n (qubits 1..n):
/// sum_mu alpha_mu |phi_mu><phi_mu|_{S_j N_j} (x) prod_{i != j} sigma_mu^T on N_i
/// with alpha = (1, i, -i^{n+1}, i) and |phi_mu> = (I (x) sigma_mu)|phi>.
DenseMatrix dense_u_dec(std::size_t n, std::size_t j);

/// V = (H (x) H) CZ (I (x) H) on (signal = qubit 0, noise = qubit 1).
DenseMatrix dense_v();

/// |phi_mu> = (sigma_mu on qubit 1)(|00> + |11>)/sqrt(2), as a 4 x 1 column.
DenseMatrix bell_basis_state(std::size_t mu);

/// Closed forms for the symmetric 1 -> M universal cloner.
struct UqcmReference {
    double eta = 0.0;
    double fidelity = 0.0;
    double chsh = 0.0;
};
UqcmReference uqcm_reference(std::size_t m);

/// The largest register a dense oracle will build.
inline constexpr std::size_t kMaxOracleQubits = 12;

}  // namespace encclone

#endif
