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

#ifndef ENCCLONE_DENSITY_MATRIX_H
#define ENCCLONE_DENSITY_MATRIX_H

#include <cstdint>
#include <span>
#include <vector>

#include "encclone/counts.h"
#include "encclone/dense_matrix.h"
#include "encclone/gate.h"
#include "encclone/pauli.h"
#include "encclone/types.h"

namespace encclone {

class StateVector;

/// Kraus representation of a channel on `arity` qubits.
struct KrausSet {
    std::size_t arity = 1;
    std::vector<DenseMatrix> ops;

    /// max |sum K^dagger K - I|.
    double trace_preservation_error() const;
};

/// Mixed state on `num_qubits` qubits.
///
/// Storage is the vectorised form: entry (r, c) lives at r + c * dim, so the low
/// n index bits address rows and the high n bits address columns. Channels are
/// applied as superoperators on that 2n-qubit vector in a single pass.
class DensityMatrix {
   public:
    /// |0...0><0...0|.
    explicit DensityMatrix(std::size_t num_qubits, std::size_t max_qubits = kDefaultMaxDensityQubits);
    static DensityMatrix from_pure(const StateVector &psi, std::size_t max_qubits = kDefaultMaxDensityQubits);
    static DensityMatrix maximally_mixed(std::size_t num_qubits);
    /// Row-major dense input; validated against the density-matrix invariants.
    static DensityMatrix from_dense(const DenseMatrix &m);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::uint64_t dim() const {
        return dim_;
    }
    cplx at(std::uint64_t row, std::uint64_t col) const {
        return data_[row + col * dim_];
    }
    DenseMatrix to_dense() const;

    void apply(const Gate &gate, std::span<const Qubit> targets);
    void apply_unitary(const DenseMatrix &u, std::span<const Qubit> targets);
    /// rho -> sum K rho K^dagger. Throws InvalidArgument when the Kraus set is
    /// not trace preserving within 1e-10.
    void apply_channel(const KrausSet &kraus, std::span<const Qubit> targets);
    /// rho -> (1 - p) rho + p (I/d_T tensor Tr_T rho) on the target qubits.
    void depolarize(std::span<const Qubit> targets, double p);

    double trace() const;
    double purity() const;
    /// max |rho - rho^dagger|.
    double hermiticity_error() const;
    double expect_pauli(const PauliString &p) const;
    DensityMatrix reduced(std::span<const Qubit> keep) const;
    std::vector<double> probabilities(std::span<const Qubit> qubits) const;
    CountsTable sample(std::span<const Qubit> qubits, std::uint64_t shots, std::uint64_t seed) const;

   private:
    DensityMatrix() = default;
    void check_targets(std::span<const Qubit> targets) const;
    void apply_superop(const DenseMatrix &superop, std::span<const Qubit> targets);

    std::size_t num_qubits_ = 0;
    std::uint64_t dim_ = 1;
    std::vector<cplx> data_;
};

/// <target| rho |target>, clamped to [0, 1] after a 1e-10 sanity margin.
double fidelity_with_pure(const DensityMatrix &rho, const StateVector &target);

}  // namespace encclone

#endif
