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

#include <cmath>

#include "encclone/error.h"
#include "encclone/noise.h"

namespace encclone {

NoiseParams NoiseParams::noiseless() {
    NoiseParams p;
    p.p2q = 0.0;
    p.p1q = 0.0;
    p.t1 = std::numeric_limits<double>::infinity();
    p.t2 = std::numeric_limits<double>::infinity();
    return p;
}

void NoiseParams::validate() const {
    if (!(p2q >= 0.0 && p2q <= 1.0)) {
        throw InvalidArgument("p2q must lie in [0, 1]");
    }
    if (!(p1q >= 0.0 && p1q <= 1.0)) {
        throw InvalidArgument("p1q must lie in [0, 1]");
    }
    if (!(t1 > 0.0) || !(t2 > 0.0)) {
        throw InvalidArgument("T1 and T2 must be positive");
    }
    if (t2 > 2.0 * t1) {
        throw InvalidArgument("T2 must not exceed 2*T1");
    }
    if (trajectories == 0) {
        throw InvalidArgument("trajectories must be >= 1");
    }
}

KrausSet depolarizing_kraus(double p, std::size_t arity) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("depolarizing probability must lie in [0, 1]");
    }
    if (arity < 1 || arity > 2) {
        throw InvalidArgument("depolarizing channel arity must be 1 or 2");
    }
    const double d2 = static_cast<double>(std::size_t{1} << (2 * arity));
    KrausSet k;
    k.arity = arity;
    const std::size_t count = std::size_t{1} << (2 * arity);
    for (std::size_t idx = 0; idx < count; ++idx) {
        PauliString ps(arity);
        for (std::size_t q = 0; q < arity; ++q) {
            ps.ops[q] = static_cast<Pauli>((idx >> (2 * q)) & 3);
        }
        double w = idx == 0 ? 1.0 - p + p / d2 : p / d2;
        if (w == 0.0) {
            continue;
        }
        k.ops.push_back(ps.matrix() * cplx{std::sqrt(w), 0.0});
    }
    return k;
}

namespace {

void check_idle(double t1, double t2, double t) {
    if (!(t1 > 0.0) || !(t2 > 0.0)) {
        throw InvalidArgument("T1 and T2 must be positive");
    }
    if (t2 > 2.0 * t1) {
        throw InvalidArgument("T2 must not exceed 2*T1");
    }
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidArgument("idle duration must be finite and non-negative");
    }
}

}  // namespace

KrausSet idle_kraus(double t1, double t2, double t) {
    check_idle(t1, t2, t);
    const double gamma = 1.0 - std::exp(-t / t1);
    const double inv_tphi = std::max(0.0, 1.0 / t2 - 1.0 / (2.0 * t1));
    const double e = std::exp(-t * inv_tphi);
    const DenseMatrix ad0(2, 2, {1, 0, 0, std::sqrt(1.0 - gamma)});
    const DenseMatrix ad1(2, 2, {0, std::sqrt(gamma), 0, 0});
    const DenseMatrix d0 = DenseMatrix::identity(2) * cplx{std::sqrt((1.0 + e) / 2.0), 0.0};
    const DenseMatrix d1 = DenseMatrix(2, 2, {1, 0, 0, -1}) * cplx{std::sqrt((1.0 - e) / 2.0), 0.0};
    KrausSet k;
    k.arity = 1;
    for (const auto *a : {&ad0, &ad1}) {
        for (const auto *d : {&d0, &d1}) {
            k.ops.push_back(*d * *a);
        }
    }
    return k;
}

PauliRates twirled_idle(double t1, double t2, double t) {
    check_idle(t1, t2, t);
    const double a = std::exp(-t / t2);
    const double b = std::exp(-t / t1);
    return {(1.0 - b) / 4.0, (1.0 - b) / 4.0, std::max(0.0, (1.0 - 2.0 * a + b) / 4.0)};
}

KrausSet pauli_kraus(const PauliRates &r) {
    const double pi = 1.0 - r.px - r.py - r.pz;
    if (r.px < 0 || r.py < 0 || r.pz < 0 || pi < -1e-15) {
        throw InvalidArgument("Pauli rates must be non-negative and sum to at most 1");
    }
    KrausSet k;
    k.arity = 1;
    const double w[4] = {std::max(0.0, pi), r.px, r.py, r.pz};
    for (int i = 0; i < 4; ++i) {
        if (w[i] > 0.0) {
            k.ops.push_back(pauli_matrix(static_cast<Pauli>(i)) * cplx{std::sqrt(w[i]), 0.0});
        }
    }
    return k;
}

std::vector<NoiseEvent> noisy_program(const Circuit &c, const NoiseParams &params) {
    params.validate();
    const Schedule sched = schedule_asap(c, params.durations);
    const auto &ops = c.ops();
    std::vector<NoiseEvent> events;
    std::vector<bool> started(c.num_qubits(), false);
    std::vector<bool> measured(c.num_qubits(), false);
    std::vector<double> busy(c.num_qubits(), 0.0);
    const bool idle = params.idle_enabled();
    for (std::size_t l = 0; l < sched.layers.size(); ++l) {
        std::fill(busy.begin(), busy.end(), 0.0);
        std::vector<Qubit> measured_now;
        for (std::size_t i : sched.layers[l]) {
            const Operation &op = ops[i];
            NoiseEvent ev;
            ev.kind = NoiseEvent::Kind::Gate;
            ev.op = i;
            ev.qubits = op.qubits;
            ev.arity = op.gate.arity();
            events.push_back(ev);
            if (op.gate.kind == GateKind::MEASURE) {
                measured_now.push_back(op.qubits[0]);
                continue;
            }
            if (op.gate.kind == GateKind::IDLE) {
                continue;
            }
            for (Qubit q : op.targets()) {
                started[q] = true;
                busy[q] = params.durations.of(op.gate);
            }
            const double p = op.gate.is_two_qubit() ? params.p2q : params.p1q;
            if (p > 0.0) {
                NoiseEvent dep;
                dep.kind = NoiseEvent::Kind::Depolarize;
                dep.qubits = op.qubits;
                dep.arity = op.gate.arity();
                dep.value = p;
                events.push_back(dep);
            }
        }
        for (Qubit q : measured_now) {
            measured[q] = true;
        }
        if (!idle) {
            continue;
        }
        for (Qubit q = 0; q < c.num_qubits(); ++q) {
            if (!started[q] || measured[q]) {
                continue;
            }
            const double t = sched.durations[l] - busy[q];
            if (t > 0.0) {
                NoiseEvent ev;
                ev.kind = NoiseEvent::Kind::Idle;
                ev.qubits = {q, 0};
                ev.arity = 1;
                ev.value = t;
                events.push_back(ev);
            }
        }
    }
    return events;
}

}  // namespace encclone
