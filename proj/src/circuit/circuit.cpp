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

#include <algorithm>

#include "encclone/error.h"

namespace encclone {

bool Operation::operator==(const Operation &other) const {
    if (!(gate == other.gate)) {
        return false;
    }
    auto a = targets();
    auto b = other.targets();
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

Circuit &Circuit::append(const Gate &gate, std::span<const Qubit> targets) {
    if (targets.size() != gate.arity()) {
        throw InvalidArgument("gate " + gate.name() + " expects " + std::to_string(gate.arity()) + " target(s), got " +
                              std::to_string(targets.size()));
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] >= num_qubits_) {
            throw OutOfRange("gate " + gate.name() + " on qubit " + std::to_string(targets[i]) +
                             " outside a circuit of " + std::to_string(num_qubits_) + " qubits");
        }
        if (i > 0 && targets[i] == targets[0]) {
            throw InvalidArgument("gate " + gate.name() + " repeats qubit " + std::to_string(targets[i]));
        }
    }
    measured_.resize(num_qubits_, false);
    for (Qubit q : targets) {
        if (measured_[q]) {
            throw InvalidArgument("gate " + gate.name() + " acts on qubit " + std::to_string(q) +
                                  " after its measurement");
        }
    }
    Operation op;
    op.gate = gate;
    std::copy(targets.begin(), targets.end(), op.qubits.begin());
    ops_.push_back(op);
    if (gate.kind == GateKind::MEASURE) {
        measured_[targets[0]] = true;
    }
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw InvalidArgument("appended circuit has " + std::to_string(other.num_qubits_) + " qubits, more than " +
                              std::to_string(num_qubits_));
    }
    for (const auto &op : other.ops_) {
        append(op.gate, op.targets());
    }
    return *this;
}

void Circuit::set_layout(std::shared_ptr<const QubitLayout> layout) {
    if (layout) {
        if (layout->size() != num_qubits_) {
            throw InvalidArgument("layout has " + std::to_string(layout->size()) + " roles for " +
                                  std::to_string(num_qubits_) + " qubits");
        }
        layout->validate();
    }
    layout_ = std::move(layout);
}

bool Circuit::is_clifford() const {
    return !first_non_clifford().has_value();
}

std::optional<std::size_t> Circuit::first_non_clifford() const {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        if (!ops_[i].gate.is_clifford()) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<Qubit> Circuit::measured_qubits() const {
    std::vector<Qubit> out;
    for (const auto &op : ops_) {
        if (op.gate.kind == GateKind::MEASURE) {
            out.push_back(op.qubits[0]);
        }
    }
    return out;
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits_);
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        const Gate &g = it->gate;
        auto t = it->targets();
        switch (g.kind) {
            case GateKind::MEASURE:
                throw InvalidArgument("a circuit containing MEASURE has no inverse");
            case GateKind::S:
                out.append(Gate::sdg(), t);
                break;
            case GateKind::Sdg:
                out.append(Gate::s(), t);
                break;
            case GateKind::RZ:
                out.append(Gate::rz(-g.param), t);
                break;
            case GateKind::SX:
                out.append(Gate::rz(kPi), t);
                out.append(Gate::sx(), t);
                out.append(Gate::rz(kPi), t);
                break;
            default:
                out.append(g, t);
        }
    }
    out.layout_ = layout_;
    return out;
}

bool Circuit::operator==(const Circuit &other) const {
    if (num_qubits_ != other.num_qubits_ || ops_ != other.ops_) {
        return false;
    }
    if (!layout_ || !other.layout_) {
        return !layout_ && !other.layout_;
    }
    return *layout_ == *other.layout_;
}

}  // namespace encclone
