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

#ifndef ENCCLONE_STATEVECTOR_H
#define ENCCLONE_STATEVECTOR_H

#include <cstdint>
#include <span>
#include <vector>

#include "encclone/counts.h"
#include "encclone/gate.h"
#include "encclone/pauli.h"
#include "encclone/types.h"

namespace encclone {

class DensityMatrix;

/// Dense pure state over `num_qubits` qubits. Amplitude index bit q is qubit q.
class StateVector {
   public:
    /// |0...0>. Throws CapacityError above `max_qubits`.
    explicit StateVector(std::size_t num_qubits, std::size_t max_qubits = kDefaultMaxStatevectorQubits);
    static StateVector from_amplitudes(std::vector<cplx> amplitudes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::uint64_t dim() const {
        return amps_.size();
    }
    std::span<const cplx> amplitudes() const {
        return amps_;
    }
    cplx amplitude(std::uint64_t index) const {
        return amps_[index];
    }

    /// Applies a unitary gate. IDLE and MEASURE are no-ops on a pure state.
    void apply(const Gate &gate, std::span<const Qubit> targets);
    void apply_1q(const DenseMatrix &m, Qubit q);
    void apply_2q(const DenseMatrix &m, Qubit q0, Qubit q1);
    /// Generic k-qubit matrix; local index bit i corresponds to targets[i].
    void apply_matrix(const DenseMatrix &m, std::span<const Qubit> targets);
    void apply_pauli(const PauliString &p);

    double norm_squared() const;
    /// <psi|P|psi> (real part; the imaginary part vanishes for Hermitian P).
    double expect_pauli(const PauliString &p) const;
    cplx inner(const StateVector &other) const;

    /// Partial trace onto `keep`; keep[i] becomes qubit i of the result.
    DensityMatrix reduced(std::span<const Qubit> keep) const;
    /// Marginal Born distribution over `qubits` (outcome bit i = qubits[i]).
    std::vector<double> probabilities(std::span<const Qubit> qubits) const;
    CountsTable sample(std::span<const Qubit> qubits, std::uint64_t shots, std::uint64_t seed) const;

   private:
    StateVector() = default;
    void check_targets(std::span<const Qubit> targets) const;

    std::size_t num_qubits_ = 0;
    std::vector<cplx> amps_;
};

/// Draws `shots` outcomes from a discrete distribution (used by every backend).
CountsTable sample_distribution(const std::vector<double> &probs, std::size_t num_bits, std::uint64_t shots,
                                std::uint64_t seed);

}  // namespace encclone

#endif
