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

#ifndef ENCCLONE_PROTOCOL_H
#define ENCCLONE_PROTOCOL_H

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "encclone/circuit.h"
#include "encclone/layout.h"

namespace encclone {

/// H(a), CNOT(a, b): |00> -> (|00> + |11>)/sqrt(2).
void append_bell_prep(Circuit &c, Qubit a, Qubit b);
Circuit bell_prep(std::size_t num_qubits, Qubit a, Qubit b);

/// H on qubits[0] then a CNOT chain: prepares (|0..0> + |1..1>)/sqrt(2).
void append_ghz_prep(Circuit &c, std::span<const Qubit> qubits);
Circuit ghz_prep(std::size_t num_qubits, std::span<const Qubit> qubits);

/// exp(-i pi/4 Z_data Z_s1 ... Z_sn) as a two-ended CNOT ladder collecting the
/// parity on the middle signal qubit, RZ(pi/2) there, and the mirrored ladder.
void append_zz_phase(Circuit &c, Qubit data, std::span<const Qubit> signals);

/// U_enc = exp(-i pi/4 X..X) exp(-i pi/4 Z..Z) on data and signals. The X factor
/// is the Z factor conjugated by Hadamards. 4n two-qubit gates in total.
void append_encryption(Circuit &c, Qubit data, std::span<const Qubit> signals);

/// V = (H x H) CZ (I x H) on (signal, noise): time order H(noise), CZ, H, H.
void append_v(Circuit &c, Qubit signal, Qubit noise);
void append_v_dagger(Circuit &c, Qubit signal, Qubit noise);

/// Decryption of `signal` with its own noise partner `partner` and the other
/// key qubits `others` (N_i, i != j, in increasing i). Built as V, the
/// decryption core, V^dagger. `n` is the clone parameter fixing the phase
/// alpha_2 = -i^(n+1); passing fewer `others` than n - 1 yields the
/// incomplete-key circuit (which does not decrypt).
void append_decryption(Circuit &c, Qubit signal, Qubit partner, std::span<const Qubit> others, std::size_t n);

/// Encryption on the layout's A and S_1..S_n (level 0, group 0).
Circuit build_encryption(std::size_t n, const QubitLayout &layout);
/// Decryption of S_j with N_1..N_n from the layout (level 0, group 0).
Circuit build_decryption(std::size_t n, std::size_t j, const QubitLayout &layout);

/// Experiment 1 pipeline on the standard layout: Bell(Atilde, A), Bell(S_i, N_i),
/// encryption, decryption of S_j. The decrypted partner of Atilde is S_j.
struct Pipeline {
    Circuit circuit;
    std::shared_ptr<const QubitLayout> layout;
    Qubit ancilla = 0;
    Qubit recovered = 0;
};
Pipeline build_pipeline(std::size_t n, std::size_t j = 1);

enum class IterationStrategy : std::uint8_t { Full, SingleBranch };

/// Iterated encrypted cloning with even n.
///
/// Full: every clone of each generation is cloned again. SingleBranch: only the
/// chosen S_1 is cloned again at each level. `extra_subset` (full strategy only)
/// re-clones that many clones of the last generation once more, which yields the
/// mixed-generation runs; the decrypted clone then lives in the extra generation
/// unless `decrypt_before_extra` is set.
struct IterationRequest {
    std::size_t n = 2;
    std::size_t l = 0;
    IterationStrategy strategy = IterationStrategy::Full;
    std::size_t extra_subset = 0;
    bool decrypt_before_extra = false;
};

struct IterationPlan {
    std::size_t n = 2;
    std::size_t l = 0;
    IterationStrategy strategy = IterationStrategy::Full;
    std::size_t extra_subset = 0;
    std::size_t total_qubits = 0;
    std::size_t clone_count = 0;          // physically created clones
    std::size_t virtual_clone_count = 0;  // (n+1)^(l+1)
    std::size_t key_size = 0;             // noise qubits used by the decryption
    std::size_t decrypted_generation = 0;
    bool exceeds_statevector = false;
    Qubit ancilla = 0;
    Qubit recovered = 0;
    std::vector<Qubit> decryption_key;
    Circuit circuit;
    std::shared_ptr<const QubitLayout> layout;
};

IterationPlan plan_iterated(const IterationRequest &request);

/// (n+1)^(l+1) and n(l+1).
std::size_t iterated_clone_count(std::size_t n, std::size_t l);
std::size_t iterated_key_size(std::size_t n, std::size_t l);

/// GHZ_r on r data qubits, each cloned with its own n=2 group and decrypted on
/// its S_1. Group g occupies qubits 5g..5g+4 as (A, S1, N1, S2, N2).
struct Experiment4Circuit {
    Circuit circuit;
    std::shared_ptr<const QubitLayout> layout;
    std::vector<Qubit> recovered;  // S_1 of each group, in GHZ order
    bool exceeds_statevector = false;
};
Experiment4Circuit build_experiment4(std::size_t r);

}  // namespace encclone

#endif
