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

#include "encclone/gate.h"

#include <cmath>
#include <cstdio>

#include "encclone/error.h"
#include "encclone/types.h"

namespace encclone {

Gate Gate::rz(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidArgument("RZ angle must be finite");
    }
    return {GateKind::RZ, theta};
}

Gate Gate::idle(double microseconds) {
    if (!std::isfinite(microseconds) || microseconds < 0) {
        throw InvalidArgument("IDLE duration must be finite and non-negative");
    }
    return {GateKind::IDLE, microseconds};
}

std::size_t Gate::arity() const {
    return is_two_qubit() ? 2 : 1;
}

int Gate::rz_quarter_turns() const {
    double turns = param / (kPi / 2);
    double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 1e-9) {
        return -1;
    }
    long long k = static_cast<long long>(rounded) % 4;
    return static_cast<int>(k < 0 ? k + 4 : k);
}

bool Gate::is_clifford() const {
    return kind != GateKind::RZ || rz_quarter_turns() >= 0;
}

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::S:
            return "S";
        case GateKind::Sdg:
            return "SDG";
        case GateKind::SX:
            return "SX";
        case GateKind::RZ:
            return "RZ";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CZ:
            return "CZ";
        case GateKind::IDLE:
            return "IDLE";
        case GateKind::MEASURE:
            return "MEASURE";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::SX, GateKind::RZ,
                       GateKind::CNOT, GateKind::CZ, GateKind::IDLE, GateKind::MEASURE}) {
        if (gate_kind_name(k) == name) {
            return k;
        }
    }
    if (name == "CX") {
        return GateKind::CNOT;
    }
    return std::nullopt;
}

std::string Gate::name() const {
    std::string out(gate_kind_name(kind));
    if (kind == GateKind::RZ || kind == GateKind::IDLE) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "(%g)", param);
        out += buf;
    }
    return out;
}

DenseMatrix Gate::matrix() const {
    const cplx i{0.0, 1.0};
    const double r = kInvSqrt2;
    switch (kind) {
        case GateKind::H:
            return DenseMatrix(2, 2, {r, r, r, -r});
        case GateKind::X:
            return DenseMatrix(2, 2, {0, 1, 1, 0});
        case GateKind::Z:
            return DenseMatrix(2, 2, {1, 0, 0, -1});
        case GateKind::S:
            return DenseMatrix(2, 2, {1, 0, 0, i});
        case GateKind::Sdg:
            return DenseMatrix(2, 2, {1, 0, 0, -i});
        case GateKind::SX:
            return DenseMatrix(2, 2, {(1.0 + i) / 2.0, (1.0 - i) / 2.0, (1.0 - i) / 2.0, (1.0 + i) / 2.0});
        case GateKind::RZ:
            return DenseMatrix(2, 2, {std::exp(-i * param / 2.0), 0, 0, std::exp(i * param / 2.0)});
        case GateKind::CNOT:
            // Local index = b0 + 2 b1 with b0 the control.
            return DenseMatrix(4, 4, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0});
        case GateKind::CZ:
            return DenseMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
        case GateKind::IDLE:
            return DenseMatrix::identity(2);
        case GateKind::MEASURE:
            break;
    }
    throw InvalidArgument("gate " + name() + " has no unitary matrix");
}

}  // namespace encclone
