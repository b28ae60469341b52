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

#include "encclone/oracles.h"

#include <cmath>

#include "encclone/error.h"
#include "encclone/pauli.h"
#include "encclone/types.h"

namespace encclone {

namespace {

// (I - i P)/sqrt(2) for a Pauli string P.
DenseMatrix quarter_exp(const PauliString &p) {
    DenseMatrix m = p.matrix();
    DenseMatrix id = DenseMatrix::identity(m.rows());
    return (id - m * cplx{0.0, 1.0}) * cplx{kInvSqrt2, 0.0};
}

}  // namespace

DenseMatrix dense_u_enc(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("number of clones n must be >= 1");
    }
    if (n + 1 > kMaxOracleQubits) {
        throw CapacityError("dense U_enc beyond " + std::to_string(kMaxOracleQubits) + " qubits");
    }
    PauliString xs(n + 1), zs(n + 1);
    for (std::size_t q = 0; q <= n; ++q) {
        xs.ops[q] = Pauli::X;
        zs.ops[q] = Pauli::Z;
    }
    return quarter_exp(xs) * quarter_exp(zs);
}

DenseMatrix bell_basis_state(std::size_t mu) {
    if (mu > 3) {
        throw OutOfRange("Bell basis index must lie in 0..3");
    }
    DenseMatrix phi(4, 1);
    phi(0, 0) = kInvSqrt2;
    phi(3, 0) = kInvSqrt2;
    // sigma_mu on qubit 1 (the high index bit).
    DenseMatrix op = pauli_matrix(static_cast<Pauli>(mu)).kron(DenseMatrix::identity(2));
    return op * phi;
}

DenseMatrix dense_u_dec(std::size_t n, std::size_t j) {
    if (n == 0) {
        throw InvalidArgument("number of clones n must be >= 1");
    }
    if (j < 1 || j > n) {
        throw OutOfRange("chosen clone j = " + std::to_string(j) + " outside 1.." + std::to_string(n));
    }
    if (n + 1 > kMaxOracleQubits) {
        throw CapacityError("dense U_dec beyond " + std::to_string(kMaxOracleQubits) + " qubits");
    }
    const cplx i{0.0, 1.0};
    const cplx alpha[4] = {1.0, i, -std::pow(i, static_cast<int>(n + 1)), i};
    const std::size_t nq = n + 1;
    const std::size_t dim = std::size_t{1} << nq;
    DenseMatrix u(dim, dim);
    for (std::size_t mu = 0; mu < 4; ++mu) {
        DenseMatrix ket = bell_basis_state(mu);
        DenseMatrix proj = ket * ket.adjoint();  // on (S_j = bit 0, N_j = bit 1)
        DenseMatrix sig_t = pauli_matrix(static_cast<Pauli>(mu)).transpose();
        // Expand the projector over Pauli pairs so it can sit on qubits 0 and j.
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = 0; b < 4; ++b) {
                DenseMatrix pair = pauli_matrix(static_cast<Pauli>(b)).kron(pauli_matrix(static_cast<Pauli>(a)));
                cplx coeff = (pair.adjoint() * proj).trace() / 4.0;
                if (std::abs(coeff) < 1e-15) {
                    continue;
                }
                // Build the full operator qubit by qubit, highest qubit first.
                DenseMatrix full = DenseMatrix::identity(1);
                for (std::size_t q = nq; q-- > 0;) {
                    DenseMatrix f;
                    if (q == 0) {
                        f = pauli_matrix(static_cast<Pauli>(a));
                    } else if (q == j) {
                        f = pauli_matrix(static_cast<Pauli>(b));
                    } else {
                        f = sig_t;
                    }
                    full = full.kron(f);
                }
                u = u + full * (alpha[mu] * coeff);
            }
        }
    }
    return u;
}

DenseMatrix dense_v() {
    const double r = kInvSqrt2;
    DenseMatrix h(2, 2, {r, r, r, -r});
    DenseMatrix id = DenseMatrix::identity(2);
    DenseMatrix cz(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    // Qubit 1 (noise) is the high factor of kron.
    return h.kron(h) * cz * h.kron(id);
}

UqcmReference uqcm_reference(std::size_t m) {
    if (m < 2) {
        throw InvalidArgument("UQCM needs M >= 2 clones");
    }
    const double md = static_cast<double>(m);
    UqcmReference out;
    out.eta = (md + 2.0) / (3.0 * md);
    out.fidelity = (md + 1.0) / (2.0 * md);
    out.chsh = out.eta * 2.0 * kSqrt2;
    return out;
}

}  // namespace encclone
