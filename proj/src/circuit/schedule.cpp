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

#include <algorithm>

#include "encclone/circuit.h"
#include "encclone/error.h"

namespace encclone {

GateDurations GateDurations::defaults() {
    GateDurations d;
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::SX, GateKind::RZ}) {
        d.table[k] = 0.032;
    }
    d.table[GateKind::CNOT] = 0.068;
    d.table[GateKind::CZ] = 0.068;
    d.table[GateKind::MEASURE] = 3.0;
    return d;
}

double GateDurations::of(const Gate &gate) const {
    if (gate.kind == GateKind::IDLE) {
        return gate.param;
    }
    auto it = table.find(gate.kind);
    if (it == table.end()) {
        throw InvalidArgument("no duration configured for gate " + std::string(gate_kind_name(gate.kind)));
    }
    return it->second;
}

Schedule schedule_asap(const Circuit &c, const GateDurations &durations) {
    Schedule s;
    std::vector<std::size_t> next_free(c.num_qubits(), 0);
    std::size_t floor = 0;
    const auto &ops = c.ops();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto &op = ops[i];
        if (op.gate.kind == GateKind::MEASURE) {
            // Open a barrier layer unless the previous op already did.
            if (i == 0 || ops[i - 1].gate.kind != GateKind::MEASURE) {
                s.layers.emplace_back();
                s.barrier.push_back(true);
                s.durations.push_back(0.0);
                floor = s.layers.size();
            }
            s.layers.back().push_back(i);
            s.durations.back() = std::max(s.durations.back(), durations.of(op.gate));
            continue;
        }
        std::size_t layer = floor;
        for (Qubit q : op.targets()) {
            layer = std::max(layer, next_free[q]);
        }
        while (s.layers.size() <= layer) {
            s.layers.emplace_back();
            s.barrier.push_back(false);
            s.durations.push_back(0.0);
        }
        s.layers[layer].push_back(i);
        s.durations[layer] = std::max(s.durations[layer], durations.of(op.gate));
        for (Qubit q : op.targets()) {
            next_free[q] = layer + 1;
        }
    }
    return s;
}

LayerMetrics layer_metrics(const Circuit &c, const GateDurations &durations) {
    Schedule s = schedule_asap(c, durations);
    LayerMetrics m;
    m.layers = s.layers.size();
    for (std::size_t l = 0; l < s.layers.size(); ++l) {
        bool has_2q = false;
        for (std::size_t i : s.layers[l]) {
            if (c.ops()[i].gate.is_two_qubit()) {
                has_2q = true;
                ++m.two_qubit_gates;
            }
        }
        m.two_qubit_layers += has_2q ? 1 : 0;
        m.total_duration += s.durations[l];
    }
    return m;
}

double total_duration(const Circuit &c, const GateDurations &durations) {
    Schedule s = schedule_asap(c, durations);
    double t = 0;
    for (double d : s.durations) {
        t += d;
    }
    return t;
}

}  // namespace encclone
