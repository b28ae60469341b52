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
#include <random>
#include <set>

#include "encclone/circuit.h"
#include "encclone/error.h"
#include "encclone/execute.h"
#include "encclone/protocol.h"
#include "gtest/gtest.h"

namespace encclone {
namespace {

Circuit random_circuit(std::size_t n, int gates, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    Circuit c(n);
    for (int g = 0; g < gates; ++g) {
        const Qubit a = rng() % n;
        const Qubit b = (a + 1 + rng() % (n - 1)) % n;
        switch (rng() % 9) {
            case 0: c.h(a); break;
            case 1: c.x(a); break;
            case 2: c.z(a); break;
            case 3: c.s(a); break;
            case 4: c.sdg(a); break;
            case 5: c.sx(a); break;
            case 6: c.rz(a, angle(rng)); break;
            case 7: c.cx(a, b); break;
            default: c.cz(a, b); break;
        }
    }
    return c;
}

TEST(Circuit, AppendValidatesTargets) {
    Circuit c(2);
    EXPECT_THROW(c.cx(0, 0), InvalidArgument);
    EXPECT_THROW(c.h(2), OutOfRange);
    c.measure(1);
    EXPECT_THROW(c.h(1), InvalidArgument);
    EXPECT_THROW(Gate::rz(std::nan("")), InvalidArgument);
    EXPECT_THROW(Gate::idle(-1.0), InvalidArgument);
}

TEST(Circuit, CliffordDetection) {
    Circuit c(1);
    c.h(0).rz(0, kPi / 2).rz(0, -kPi);
    EXPECT_TRUE(c.is_clifford());
    c.rz(0, 0.2);
    EXPECT_FALSE(c.is_clifford());
    EXPECT_EQ(c.first_non_clifford(), 3u);
}

TEST(Circuit, InverseUndoesCircuit) {
    Circuit c = random_circuit(3, 40, 5);
    Circuit round = c;
    round.append(c.inverse());
    EXPECT_LT(phase_insensitive_distance(circuit_unitary(round), DenseMatrix::identity(8)), 1e-12);
}

TEST(Lowering, UsesNativeGatesOnly) {
    Circuit low = lower_to_native(random_circuit(4, 80, 1));
    const std::set<GateKind> native{GateKind::RZ, GateKind::SX, GateKind::X, GateKind::CZ, GateKind::IDLE,
                                    GateKind::MEASURE};
    for (const auto &op : low.ops()) {
        EXPECT_TRUE(native.count(op.gate.kind)) << op.gate.name();
    }
}

TEST(Lowering, PreservesUnitaryUpToPhase) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Circuit c = random_circuit(4, 50, seed);
        EXPECT_LT(phase_insensitive_distance(circuit_unitary(c), circuit_unitary(lower_to_native(c))), 1e-12)
            << "seed " << seed;
    }
}

TEST(Lowering, HadamardIdentity) {
    Circuit h(1);
    h.h(0);
    Circuit low(1);
    low.rz(0, kPi / 2).sx(0).rz(0, kPi / 2);
    EXPECT_LT(max_deviation_up_to_phase(circuit_unitary(h), circuit_unitary(low)), 1e-12);
}

TEST(Serialize, RoundTripIsExact) {
    Pipeline p = build_pipeline(3, 2);
    Circuit c = p.circuit;
    c.rz(0, 0.1234567890123);
    c.idle(1, 2.5);
    c.measure(0);
    const std::string text = serialize(c);
    Circuit back = parse_circuit(text);
    EXPECT_TRUE(back == c);
    EXPECT_EQ(serialize(back), text);
    ASSERT_NE(back.layout(), nullptr);
    EXPECT_EQ(back.layout()->role(0).str(), "Atilde");
}

TEST(Serialize, ParseErrorsCarryLineNumbers) {
    try {
        parse_circuit("QUBITS 2\nH 0\nFOO 1\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_circuit("H 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("QUBITS 1\nCNOT 0\n"), ParseError);
}

TEST(Schedule, MeasurementsFormBarriers) {
    Circuit c(2);
    c.h(0).measure(0).h(1).measure(1);
    Schedule s = schedule_asap(c);
    std::size_t barriers = 0;
    for (bool b : s.barrier) {
        barriers += b;
    }
    EXPECT_EQ(barriers, 2u);
    // H(1) cannot start before the first readout finishes.
    EXPECT_NEAR(total_duration(c, GateDurations::defaults()), 0.032 + 3.0 + 0.032 + 3.0, 1e-12);
}

TEST(Schedule, ConsecutiveMeasurementsShareABarrier) {
    Circuit c(2);
    c.h(0).h(1).measure(0).measure(1);
    EXPECT_NEAR(total_duration(c, GateDurations::defaults()), 0.032 + 3.0, 1e-12);
}

TEST(Schedule, TwoQubitLayerCounts) {
    Circuit c(4);
    c.cx(0, 1).cx(2, 3).h(0).cz(0, 2).cx(1, 3);
    LayerMetrics m = layer_metrics(c);
    EXPECT_EQ(m.two_qubit_gates, 4u);
    // Layers: {CX01, CX23}, {H0, CX13}, {CZ02}.
    EXPECT_EQ(m.two_qubit_layers, 3u);
    EXPECT_LE(m.two_qubit_layers, m.two_qubit_gates);
}

TEST(Schedule, PipelineMetricsForTwoClones) {
    LayerMetrics m = layer_metrics(build_pipeline(2).circuit);
    EXPECT_EQ(m.two_qubit_gates, 15u);
    EXPECT_EQ(m.two_qubit_layers, 13u);
    EXPECT_NEAR(m.total_duration, 1.172, 1e-9);
}

TEST(Schedule, IdleDurationIsItsParameter) {
    GateDurations d = GateDurations::defaults();
    EXPECT_DOUBLE_EQ(d.of(Gate::idle(1.25)), 1.25);
    EXPECT_DOUBLE_EQ(d.of(Gate::cz()), 0.068);
}

}  // namespace
}  // namespace encclone
