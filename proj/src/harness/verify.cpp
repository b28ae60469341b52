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


#include "encclone/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "encclone/execute.h"
#include "encclone/oracles.h"
#include "encclone/protocol.h"
#include "encclone/statevector.h"

namespace encclone {

namespace {

void add(std::vector<VerifyCheck> &out, std::string name, double deviation, double tolerance) {
    out.push_back({std::move(name), deviation, tolerance, deviation <= tolerance});
}

std::vector<Qubit> range(Qubit first, Qubit last) {
    std::vector<Qubit> v;
    for (Qubit q = first; q <= last; ++q) {
        v.push_back(q);
    }
    return v;
}

// Encryption on (data = 0, signals = 1..n).
Circuit local_encryption(std::size_t n) {
    Circuit c(n + 1);
    append_encryption(c, 0, range(1, static_cast<Qubit>(n)));
    return c;
}

// Decryption on (S_j = 0, N_i = i).
Circuit local_decryption(std::size_t n, std::size_t j) {
    Circuit c(n + 1);
    std::vector<Qubit> others;
    for (Qubit i = 1; i <= n; ++i) {
        if (i != j) {
            others.push_back(i);
        }
    }
    append_decryption(c, 0, static_cast<Qubit>(j), others, n);
    return c;
}

double bell_infidelity(const StateVector &psi, Qubit a, Qubit b, std::size_t nq) {
    auto e = [&](Pauli p) { return psi.expect_pauli(PauliString::sparse(nq, {{a, p}, {b, p}})); };
    return std::abs(1.0 - 0.25 * (1.0 + e(Pauli::X) - e(Pauli::Y) + e(Pauli::Z)));
}

double count_mismatch(double got, double want) {
    return std::abs(got - want);
}

}  // namespace

std::vector<VerifyCheck> run_verification() {
    std::vector<VerifyCheck> out;
    constexpr double kTol = 1e-9;

    for (std::size_t n = 1; n <= 4; ++n) {
        add(out, "encryption n=" + std::to_string(n) + " matches dense oracle",
            max_deviation_up_to_phase(dense_u_enc(n), circuit_unitary(local_encryption(n))), kTol);
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::size_t j = 1; j <= n; ++j) {
            add(out, "decryption n=" + std::to_string(n) + " j=" + std::to_string(j) + " matches dense oracle",
                max_deviation_up_to_phase(dense_u_dec(n, j), circuit_unitary(local_decryption(n, j))), kTol);
        }
    }
    {
        Circuit v(2);
        append_v(v, 0, 1);
        add(out, "V matches dense oracle", max_deviation_up_to_phase(dense_v(), circuit_unitary(v)), kTol);
    }
    for (std::size_t n = 1; n <= 2; ++n) {
        const Circuit enc = local_encryption(n);
        const Circuit dec = local_decryption(n, 1);
        add(out, "native lowering of encryption n=" + std::to_string(n),
            phase_insensitive_distance(circuit_unitary(enc), circuit_unitary(lower_to_native(enc))), kTol);
        add(out, "native lowering of decryption n=" + std::to_string(n),
            phase_insensitive_distance(circuit_unitary(dec), circuit_unitary(lower_to_native(dec))), kTol);
    }

    for (std::size_t n = 2; n <= 8; ++n) {
        const Pipeline p = build_pipeline(n, 1);
        const StateVector psi = run_statevector(p.circuit);
        add(out, "noiseless recovery n=" + std::to_string(n),
            bell_infidelity(psi, p.ancilla, p.recovered, p.circuit.num_qubits()), kTol);
    }

    for (std::size_t n : {2, 4}) {
        const QubitLayout layout = standard_layout(n);
        Circuit c(layout.size());
        const Qubit at = layout.at({RoleKind::Ancilla, 0, 0, 0});
        const Qubit a = layout.at({RoleKind::Input, 0, 0, 0});
        append_bell_prep(c, at, a);
        std::vector<Qubit> signals;
        for (std::uint32_t i = 1; i <= n; ++i) {
            signals.push_back(layout.at({RoleKind::Signal, i, 0, 0}));
            append_bell_prep(c, signals.back(), layout.at({RoleKind::Noise, i, 0, 0}));
        }
        append_encryption(c, a, signals);
        const StateVector psi = run_statevector(c);
        double bloch = 0, corr = 0;
        const Pauli xyz[3] = {Pauli::X, Pauli::Y, Pauli::Z};
        for (Qubit q = 0; q < layout.size(); ++q) {
            if (q == at) {
                continue;
            }
            for (Pauli pi : xyz) {
                bloch = std::max(bloch, std::abs(psi.expect_pauli(PauliString::sparse(layout.size(), {{q, pi}}))));
                for (Pauli pj : xyz) {
                    corr = std::max(corr, std::abs(psi.expect_pauli(
                                              PauliString::sparse(layout.size(), {{at, pj}, {q, pi}}))));
                }
            }
        }
        add(out, "encrypted single-qubit marginals are I/2 n=" + std::to_string(n), bloch, 1e-10);
        add(out, "no reference correlations after encryption n=" + std::to_string(n), corr, 1e-10);
    }

    double counting = 0;
    for (std::size_t l = 0; l <= 5; ++l) {
        counting = std::max(counting, count_mismatch(static_cast<double>(iterated_clone_count(2, l)),
                                                     std::pow(3.0, static_cast<double>(l + 1))));
    }
    const std::size_t full_qubits[3] = {6, 18, 54};
    for (std::size_t l = 0; l <= 2; ++l) {
        const IterationPlan plan = plan_iterated({2, l, IterationStrategy::Full, 0, false});
        counting = std::max(counting, count_mismatch(static_cast<double>(plan.total_qubits),
                                                     static_cast<double>(full_qubits[l])));
    }
    {
        const IterationPlan plan = plan_iterated({2, 5, IterationStrategy::SingleBranch, 0, false});
        counting = std::max(counting, count_mismatch(static_cast<double>(plan.total_qubits), 26.0));
        counting = std::max(counting, count_mismatch(static_cast<double>(plan.virtual_clone_count), 729.0));
    }
    add(out, "iterated clone and qubit counts", counting, 0.0);

    const double fid[3] = {2.0 / 3.0, 0.6, 4.0 / 7.0};
    const double chsh[3] = {1.57135, 1.31993, 1.21218};
    double uqcm = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const UqcmReference ref = uqcm_reference(3 + 2 * i);
        uqcm = std::max({uqcm, std::abs(ref.fidelity - fid[i]), std::abs(ref.chsh - chsh[i])});
    }
    add(out, "cloning-machine closed forms", uqcm, 5e-4);
    double excess = -2.0;
    for (std::size_t m = 2; m <= 1000; ++m) {
        excess = std::max(excess, uqcm_reference(m).chsh - 2.0);
    }
    // Negative excess means strictly below the classical bound.
    add(out, "cloning-machine clones never violate CHSH", excess < 0 ? 0.0 : 1.0, 0.0);
    return out;
}

}  // namespace encclone
