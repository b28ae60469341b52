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

#ifndef ENCCLONE_TABLEAU_H
#define ENCCLONE_TABLEAU_H

#include <cstdint>
#include <span>
#include <vector>

#include "encclone/counts.h"
#include "encclone/gate.h"
#include "encclone/pauli.h"
#include "encclone/rng.h"

namespace encclone {

/// Binary symplectic (CHP-style) stabilizer tableau.
///
/// Rows [0, n) are destabilizers, rows [n, 2n) stabilizers, row 2n is scratch.
/// Each row stores packed X and Z bits plus a sign bit; x=z=1 denotes Y.
class Tableau {
   public:
    /// |0...0>. Throws CapacityError above kMaxTableauQubits.
    explicit Tableau(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return n_;
    }

    /// Applies a Clifford gate. RZ is accepted when its angle is a multiple of
    /// pi/2; any other non-Clifford gate throws NonCliffordError naming it.
    /// IDLE and MEASURE are no-ops.
    void apply(const Gate &gate, std::span<const Qubit> targets);

    void h(Qubit q);
    void s(Qubit q);
    void sdg(Qubit q);
    void x(Qubit q);
    void y(Qubit q);
    void z(Qubit q);
    void sx(Qubit q);
    void cx(Qubit control, Qubit target);
    void cz(Qubit a, Qubit b);

    /// Exact expectation of a Hermitian Pauli string: -1, 0 or +1 times the
    /// (real, unit) coefficient.
    int expect_pauli(const PauliString &p) const;

    /// Projective Z measurement with collapse.
    bool measure(Qubit q, Rng &rng);

    /// Born probability of `outcome` (bit i = qubits[i]) on the measured subset.
    double probability(std::span<const Qubit> qubits, std::uint64_t outcome) const;
    CountsTable sample(std::span<const Qubit> qubits, std::uint64_t shots, std::uint64_t seed) const;

    /// Checks the symplectic relations between all destabilizer/stabilizer rows.
    bool is_valid() const;

    /// Stabilizer generator i as a Pauli string with coefficient +-1.
    PauliString stabilizer(std::size_t i) const;
    PauliString destabilizer(std::size_t i) const;

   private:
    friend class ZOutcomeSpace;

    bool xbit(std::size_t row, Qubit q) const {
        return (xs_[row * words_ + q / 64] >> (q % 64)) & 1;
    }
    bool zbit(std::size_t row, Qubit q) const {
        return (zs_[row * words_ + q / 64] >> (q % 64)) & 1;
    }
    void check(Qubit q) const;
    void rowsum(std::size_t h, std::size_t i);
    void rowcopy(std::size_t dst, std::size_t src);
    void rowclear(std::size_t row);

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
    std::vector<std::uint8_t> signs_;
};

/// Z-basis outcome distribution of a stabilizer state on a qubit subset.
///
/// The outcomes are uniform over an affine subspace of GF(2)^k; the subspace is
/// found once by Gaussian elimination over the stabilizer generators, after which
/// every shot costs O(k * rank).
class ZOutcomeSpace {
   public:
    ZOutcomeSpace(const Tableau &tableau, std::span<const Qubit> qubits);

    std::size_t num_bits() const {
        return k_;
    }
    /// Number of free (uniformly random) outcome bits.
    std::size_t free_bits() const {
        return free_cols_.size();
    }
    bool contains(std::uint64_t outcome) const;
    double probability(std::uint64_t outcome) const;
    std::uint64_t draw(Rng &rng) const;

   private:
    std::size_t k_;
    // Reduced constraint rows: parity(mask & outcome) == rhs.
    std::vector<std::uint64_t> masks_;
    std::vector<std::uint8_t> rhs_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::size_t> free_cols_;
};

}  // namespace encclone

#endif
