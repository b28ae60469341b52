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

#include "encclone/circuit.h"

namespace encclone {

namespace {

void append_native_h(Circuit &out, Qubit q) {
    out.rz(q, kPi / 2);
    out.sx(q);
    out.rz(q, kPi / 2);
}

}  // namespace

Circuit lower_to_native(const Circuit &c) {
    Circuit out(c.num_qubits());
    for (const auto &op : c.ops()) {
        const Qubit q = op.qubits[0];
        switch (op.gate.kind) {
            case GateKind::H:
                append_native_h(out, q);
                break;
            case GateKind::Z:
                out.rz(q, kPi);
                break;
            case GateKind::S:
                out.rz(q, kPi / 2);
                break;
            case GateKind::Sdg:
                out.rz(q, -kPi / 2);
                break;
            case GateKind::CNOT:
                append_native_h(out, op.qubits[1]);
                out.cz(q, op.qubits[1]);
                append_native_h(out, op.qubits[1]);
                break;
            default:
                out.append(op.gate, op.targets());
        }
    }
    if (c.layout()) {
        out.set_layout(c.layout());
    }
    return out;
}

}  // namespace encclone
