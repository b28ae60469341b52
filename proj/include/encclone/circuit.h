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

#ifndef ENCCLONE_CIRCUIT_H
#define ENCCLONE_CIRCUIT_H

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encclone/dense_matrix.h"
#include "encclone/gate.h"
#include "encclone/layout.h"
#include "encclone/types.h"

namespace encclone {

struct Operation {
    Gate gate;
    std::array<Qubit, 2> qubits{0, 0};

    std::span<const Qubit> targets() const {
        return {qubits.data(), gate.arity()};
    }
    bool operator==(const Operation &other) const;
};

/// Ordered gate sequence over `num_qubits` qubits with an optional role layout.
///
/// MEASURE marks a terminal measurement: no later operation may touch a
/// measured qubit. Engines realise the measurement at the end of the run;
/// inside the circuit it only fixes timing (it is a scheduling barrier).
class Circuit {
   public:
    explicit Circuit(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {
    }

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Operation> &ops() const {
        return ops_;
    }
    std::size_t size() const {
        return ops_.size();
    }

    Circuit &append(const Gate &gate, std::span<const Qubit> targets);
    Circuit &append(const Gate &gate, std::initializer_list<Qubit> targets) {
        return append(gate, std::span<const Qubit>(targets.begin(), targets.size()));
    }
    Circuit &append(const Circuit &other);

    Circuit &h(Qubit q) {
        return append(Gate::h(), {q});
    }
    Circuit &x(Qubit q) {
        return append(Gate::x(), {q});
    }
    Circuit &z(Qubit q) {
        return append(Gate::z(), {q});
    }
    Circuit &s(Qubit q) {
        return append(Gate::s(), {q});
    }
    Circuit &sdg(Qubit q) {
        return append(Gate::sdg(), {q});
    }
    Circuit &sx(Qubit q) {
        return append(Gate::sx(), {q});
    }
    Circuit &rz(Qubit q, double theta) {
        return append(Gate::rz(theta), {q});
    }
    Circuit &cx(Qubit control, Qubit target) {
        return append(Gate::cnot(), {control, target});
    }
    Circuit &cz(Qubit a, Qubit b) {
        return append(Gate::cz(), {a, b});
    }
    Circuit &idle(Qubit q, double microseconds) {
        return append(Gate::idle(microseconds), {q});
    }
    Circuit &measure(Qubit q) {
        return append(Gate::measure(), {q});
    }

    const std::shared_ptr<const QubitLayout> &layout() const {
        return layout_;
    }
    void set_layout(std::shared_ptr<const QubitLayout> layout);

    bool is_clifford() const;
    /// Index of the first non-Clifford operation, if any.
    std::optional<std::size_t> first_non_clifford() const;
    /// Qubits carrying a MEASURE, in order of appearance.
    std::vector<Qubit> measured_qubits() const;
    /// Unitary inverse. Throws for MEASURE; SX inverts to RZ(pi) SX RZ(pi).
    Circuit inverse() const;

    bool operator==(const Circuit &other) const;

   private:
    std::size_t num_qubits_;
    std::vector<Operation> ops_;
    std::vector<bool> measured_;
    std::shared_ptr<const QubitLayout> layout_;
};

/// Rewrites into {RZ, SX, X, CZ, IDLE, MEASURE}. H = RZ(pi/2) SX RZ(pi/2) in
/// time order, CNOT(a, b) = H(b) CZ(a, b) H(b), S = RZ(pi/2), Sdg = RZ(-pi/2),
/// Z = RZ(pi). Equal to the input up to global phase.
Circuit lower_to_native(const Circuit &c);

/// Per-gate-kind durations in microseconds. IDLE always uses its own parameter.
struct GateDurations {
    std::map<GateKind, double> table;

    /// 32 ns single-qubit, 68 ns two-qubit, 3 us measurement.
    static GateDurations defaults();
    /// Throws InvalidArgument when the kind has no entry.
    double of(const Gate &gate) const;
};

/// Greedy as-soon-as-possible layering. Each operation lands in the first layer
/// after the last layer touching any of its qubits. A MEASURE block (maximal run
/// of consecutive MEASUREs) is a barrier occupying its own layer.
struct Schedule {
    std::vector<std::vector<std::size_t>> layers;
    std::vector<bool> barrier;
    std::vector<double> durations;
};

Schedule schedule_asap(const Circuit &c, const GateDurations &durations = GateDurations::defaults());

struct LayerMetrics {
    std::size_t two_qubit_layers = 0;  // L_2q
    std::size_t two_qubit_gates = 0;   // N_2q
    std::size_t layers = 0;
    double total_duration = 0.0;  // microseconds
};

LayerMetrics layer_metrics(const Circuit &c, const GateDurations &durations = GateDurations::defaults());
/// Sum over layers of the longest gate in each layer (IDLE counted by its parameter).
double total_duration(const Circuit &c, const GateDurations &durations);

/// Text form: an optional "QUBITS n" line, optional "ROLE q name" lines, then one
/// "GATE q0 [q1] [param]" line per operation. '#' starts a comment.
std::string serialize(const Circuit &c);
Circuit parse_circuit(std::string_view text);

}  // namespace encclone

#endif
