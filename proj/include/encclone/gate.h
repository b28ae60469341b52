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

#ifndef ENCCLONE_GATE_H
#define ENCCLONE_GATE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "encclone/dense_matrix.h"

namespace encclone {

enum class GateKind : std::uint8_t { H, X, Z, S, Sdg, SX, RZ, CNOT, CZ, IDLE, MEASURE };

/// A gate kind plus its parameter: the RZ angle in radians or the IDLE
/// duration in microseconds. CNOT targets are (control, target).
struct Gate {
    GateKind kind = GateKind::H;
    double param = 0.0;

    static Gate h() {
        return {GateKind::H, 0.0};
    }
    static Gate x() {
        return {GateKind::X, 0.0};
    }
    static Gate z() {
        return {GateKind::Z, 0.0};
    }
    static Gate s() {
        return {GateKind::S, 0.0};
    }
    static Gate sdg() {
        return {GateKind::Sdg, 0.0};
    }
    static Gate sx() {
        return {GateKind::SX, 0.0};
    }
    static Gate rz(double theta);
    static Gate cnot() {
        return {GateKind::CNOT, 0.0};
    }
    static Gate cz() {
        return {GateKind::CZ, 0.0};
    }
    static Gate idle(double microseconds);
    static Gate measure() {
        return {GateKind::MEASURE, 0.0};
    }

    std::size_t arity() const;
    bool is_two_qubit() const {
        return kind == GateKind::CNOT || kind == GateKind::CZ;
    }
    bool is_unitary() const {
        return kind != GateKind::IDLE && kind != GateKind::MEASURE;
    }
    /// Clifford test; RZ counts when its angle is a multiple of pi/2.
    bool is_clifford() const;
    /// For Clifford RZ: the number of quarter turns mod 4.
    int rz_quarter_turns() const;

    /// "H", "RZ(0.785398)", "IDLE(3)", ...
    std::string name() const;
    /// 2x2 or 4x4 unitary; qubit of targets[0] is the low index bit.
    DenseMatrix matrix() const;

    bool operator==(const Gate &other) const = default;
};

std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

}  // namespace encclone

#endif
