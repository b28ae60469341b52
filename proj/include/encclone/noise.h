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

#ifndef ENCCLONE_NOISE_H
#define ENCCLONE_NOISE_H

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "encclone/circuit.h"
#include "encclone/counts.h"
#include "encclone/density_matrix.h"
#include "encclone/pauli.h"
#include "encclone/tableau.h"

namespace encclone {

/// Hardware-noise proxy. Defaults: p2q = 0.003, no single-qubit gate noise,
/// T1 = 263 us, T2 = 149 us. Infinite T1/T2 switch idle decay off.
struct NoiseParams {
    double p2q = 0.003;
    double p1q = 0.0;
    double t1 = 263.0;
    double t2 = 149.0;
    GateDurations durations = GateDurations::defaults();
    std::size_t trajectories = 1000;
    /// Density backend only: replace amplitude damping + dephasing by its Pauli
    /// twirl, i.e. the channel the trajectory backend samples.
    bool twirl_idle = false;

    /// No noise at all; execution reduces to the noiseless engines.
    static NoiseParams noiseless();

    bool idle_enabled() const {
        return std::isfinite(t1) || std::isfinite(t2);
    }
    /// Throws InvalidArgument on p outside [0, 1], T1 <= 0, T2 <= 0, T2 > 2 T1 or
    /// zero trajectories.
    void validate() const;
};

/// sqrt(1 - p + p/d^2) I and sqrt(p/d^2) P for the d^2 - 1 other Paulis, d = 2^arity.
KrausSet depolarizing_kraus(double p, std::size_t arity);

/// Amplitude damping gamma = 1 - exp(-t/T1) followed by pure dephasing with
/// 1/T_phi = 1/T2 - 1/(2 T1).
KrausSet idle_kraus(double t1, double t2, double t);

struct PauliRates {
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;
};

/// Pauli twirl of idle_kraus: px = py = (1 - e^{-t/T1})/4,
/// pz = (1 - 2 e^{-t/T2} + e^{-t/T1})/4.
PauliRates twirled_idle(double t1, double t2, double t);
KrausSet pauli_kraus(const PauliRates &rates);

/// One step of a noisy run: a circuit operation, a depolarizing event after a
/// gate, or idle decay of one qubit for `duration` microseconds.
struct NoiseEvent {
    enum class Kind : std::uint8_t { Gate, Depolarize, Idle };
    Kind kind = Kind::Gate;
    std::size_t op = 0;
    std::array<Qubit, 2> qubits{0, 0};
    std::size_t arity = 1;
    double value = 0.0;  // probability or duration
};

/// Interleaves noise with the circuit following its ASAP schedule. Qubits idle
/// from their first non-IDLE gate until their measurement; inside a layer a
/// qubit idles for the layer duration minus its own gate time.
std::vector<NoiseEvent> noisy_program(const Circuit &c, const NoiseParams &params);

/// Density-matrix execution (capacity 13 qubits by default).
DensityMatrix execute_noisy_density(const Circuit &c, const NoiseParams &params,
                                    std::size_t max_qubits = kDefaultMaxDensityQubits);

/// Mean and standard error over trajectories.
struct TrajectoryValue {
    double mean = 0.0;
    double sigma = 0.0;
};

/// Pauli-frame trajectory ensemble over a noiseless reference tableau.
///
/// Each trajectory carries the Pauli error accumulated so far, propagated
/// through the remaining Clifford gates. Idle decay is sampled from its Pauli
/// twirl.
class TrajectoryEnsemble {
   public:
    TrajectoryEnsemble(const Circuit &c, const NoiseParams &params, std::uint64_t seed);

    std::size_t size() const {
        return count_;
    }
    const Tableau &reference() const {
        return reference_;
    }

    /// Trajectory average of the expectation of a Hermitian Pauli string.
    TrajectoryValue expect_pauli(const PauliString &p) const;
    /// Per-trajectory values, +-1 times the reference expectation.
    std::vector<int> pauli_values(const PauliString &p) const;
    /// Trajectory average of the Born probability of `outcome` (bit i = qubits[i]).
    TrajectoryValue probability(std::span<const Qubit> qubits, std::uint64_t outcome) const;
    /// Means of the Pauli expectation over `batches` contiguous groups of
    /// trajectories (split on 64-trajectory words), paired with group sizes.
    std::vector<std::pair<double, std::size_t>> pauli_batches(const PauliString &p, std::size_t batches) const;
    std::vector<std::pair<double, std::size_t>> probability_batches(std::span<const Qubit> qubits,
                                                                    std::uint64_t outcome, std::size_t batches) const;
    /// One shot per trajectory, cycling when shots exceed the ensemble size.
    CountsTable sample(std::span<const Qubit> qubits, std::uint64_t shots, std::uint64_t seed) const;

   private:
    bool frame_x(std::size_t traj, Qubit q) const;
    std::uint64_t frame_bits(std::size_t traj, std::span<const Qubit> qubits) const;

    std::size_t num_qubits_;
    std::size_t count_;
    std::size_t words_;
    Tableau reference_;
    // Bit t of word w in fx_[q * words_ + w]: X component of trajectory 64w + t.
    std::vector<std::uint64_t> fx_;
    std::vector<std::uint64_t> fz_;
};

}  // namespace encclone

#endif
