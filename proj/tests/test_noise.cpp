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

#include "encclone/density_matrix.h"
#include "encclone/error.h"
#include "encclone/execute.h"
#include "encclone/noise.h"
#include "encclone/statevector.h"
#include "gtest/gtest.h"

namespace encclone {
namespace {

double bell_fidelity(const DensityMatrix &rho) {
    // <Phi+| rho |Phi+> on qubits (0, 1) of a two-qubit state.
    return 0.5 * (rho.at(0, 0) + rho.at(0, 3) + rho.at(3, 0) + rho.at(3, 3)).real();
}

NoiseParams only_depolarizing(double p2q) {
    NoiseParams p = NoiseParams::noiseless();
    p.p2q = p2q;
    return p;
}

TEST(Channels, KrausSetsAreTracePreserving) {
    for (double p : {0.0, 0.01, 0.5, 1.0}) {
        EXPECT_LT(depolarizing_kraus(p, 1).trace_preservation_error(), 1e-12);
        EXPECT_LT(depolarizing_kraus(p, 2).trace_preservation_error(), 1e-12);
    }
    for (double t : {0.0, 0.07, 3.0, 500.0}) {
        EXPECT_LT(idle_kraus(263, 149, t).trace_preservation_error(), 1e-12);
    }
    EXPECT_THROW(depolarizing_kraus(1.5, 1), InvalidArgument);
}

TEST(Channels, DepolarizingOnBellPair) {
    for (double p : {0.0, 0.1, 0.6, 1.0}) {
        Circuit c(2);
        c.h(0).cx(0, 1);
        DensityMatrix rho = run_density(c);
        const Qubit t[2] = {0, 1};
        rho.apply_channel(depolarizing_kraus(p, 2), t);
        EXPECT_NEAR(bell_fidelity(rho), 1.0 - 0.75 * p, 1e-12);
    }
}

TEST(Channels, IdleDecayRates) {
    const double t1 = 263, t2 = 149, t = 40;
    const Qubit q[1] = {0};
    DensityMatrix excited(1);
    excited.apply(Gate::x(), q);
    excited.apply_channel(idle_kraus(t1, t2, t), q);
    EXPECT_NEAR(excited.at(1, 1).real(), std::exp(-t / t1), 1e-12);

    DensityMatrix plus(1);
    plus.apply(Gate::h(), q);
    plus.apply_channel(idle_kraus(t1, t2, t), q);
    EXPECT_NEAR(plus.expect_pauli(PauliString::parse("X")), std::exp(-t / t2), 1e-12);
}

TEST(Channels, TwirledIdleRates) {
    const double t1 = 263, t2 = 149, t = 3.0;
    PauliRates r = twirled_idle(t1, t2, t);
    EXPECT_NEAR(r.px, (1 - std::exp(-t / t1)) / 4, 1e-15);
    EXPECT_NEAR(r.py, r.px, 1e-15);
    EXPECT_NEAR(r.pz, (1 - 2 * std::exp(-t / t2) + std::exp(-t / t1)) / 4, 1e-15);
    // The twirl keeps the decay of <X> and <Z> about the maximally mixed point.
    const Qubit q[1] = {0};
    DensityMatrix plus(1);
    plus.apply(Gate::h(), q);
    plus.apply_channel(pauli_kraus(r), q);
    EXPECT_NEAR(plus.expect_pauli(PauliString::parse("X")), std::exp(-t / t2), 1e-12);
}

TEST(NoiseParams, Validation) {
    NoiseParams p;
    EXPECT_NO_THROW(p.validate());
    p.t2 = 600;
    EXPECT_THROW(p.validate(), InvalidArgument);
    p = NoiseParams{};
    p.p2q = -0.1;
    EXPECT_THROW(p.validate(), InvalidArgument);
    EXPECT_FALSE(NoiseParams::noiseless().idle_enabled());
}

TEST(NoisyProgram, DepolarizesAfterTwoQubitGates) {
    Circuit c(3);
    c.h(0).cx(0, 1).cz(1, 2);
    auto events = noisy_program(c, only_depolarizing(0.01));
    std::size_t depol = 0, gates = 0;
    for (const auto &e : events) {
        depol += e.kind == NoiseEvent::Kind::Depolarize;
        gates += e.kind == NoiseEvent::Kind::Gate;
        if (e.kind == NoiseEvent::Kind::Depolarize) {
            EXPECT_EQ(e.arity, 2u);
            EXPECT_DOUBLE_EQ(e.value, 0.01);
        }
    }
    EXPECT_EQ(gates, 3u);
    EXPECT_EQ(depol, 2u);
}

TEST(NoisyProgram, IdleFillsLayerAroundReadout) {
    NoiseParams p = NoiseParams{};
    p.p2q = 0;
    Circuit c(2);
    c.h(0).h(1).measure(1).h(0);
    double idle0 = 0;
    for (const auto &e : noisy_program(c, p)) {
        if (e.kind == NoiseEvent::Kind::Idle && e.qubits[0] == 0) {
            idle0 += e.value;
        }
    }
    // Qubit 0 waits out the 3 us readout of qubit 1.
    EXPECT_NEAR(idle0, 3.0, 1e-12);
}

TEST(NoisyDensity, NoiselessMatchesStateVector) {
    Circuit c(3);
    c.h(0).cx(0, 1).rz(1, 0.4).cx(1, 2).sx(0);
    DensityMatrix rho = execute_noisy_density(c, NoiseParams::noiseless());
    StateVector psi = run_statevector(c);
    EXPECT_NEAR(fidelity_with_pure(rho, psi), 1.0, 1e-12);
}

TEST(NoisyDensity, FullDepolarizingReachesFloor) {
    Circuit c(2);
    c.h(0).cx(0, 1);
    DensityMatrix rho = execute_noisy_density(c, only_depolarizing(1.0));
    EXPECT_NEAR(bell_fidelity(rho), 0.25, 1e-12);
}

// The trajectory ensemble samples the twirled channel, so it must agree with
// the twirled density simulation in expectation.
TEST(Trajectory, AgreesWithTwirledDensity) {
    Circuit c(3);
    c.h(0).cx(0, 1).cx(1, 2).s(2).h(1).cz(0, 2).measure(1).h(0);
    NoiseParams p;
    p.p2q = 0.05;
    p.p1q = 0.02;
    p.t1 = 20;
    p.t2 = 15;
    p.twirl_idle = true;
    p.trajectories = 40000;
    DensityMatrix rho = execute_noisy_density(c, p);
    TrajectoryEnsemble ens(c, p, 17);
    for (const char *s : {"XIZ", "ZZI", "IZZ", "YIY", "XXX", "ZIZ"}) {
        PauliString ps = PauliString::parse(s);
        TrajectoryValue v = ens.expect_pauli(ps);
        const double want = rho.expect_pauli(ps);
        EXPECT_NEAR(v.mean, want, 5 * std::max(v.sigma, 1e-3)) << s;
    }
    const Qubit qs[2] = {0, 2};
    auto probs = rho.probabilities(qs);
    for (std::uint64_t o = 0; o < 4; ++o) {
        TrajectoryValue v = ens.probability(qs, o);
        EXPECT_NEAR(v.mean, probs[o], 5 * std::max(v.sigma, 1e-3));
    }
}

TEST(Trajectory, BatchesReproduceOverallMean) {
    Circuit c(2);
    c.h(0).cx(0, 1);
    NoiseParams p = only_depolarizing(0.2);
    p.trajectories = 1000;
    TrajectoryEnsemble ens(c, p, 3);
    PauliString zz = PauliString::parse("ZZ");
    auto batches = ens.pauli_batches(zz, 7);
    double total = 0, weighted = 0;
    for (auto [m, w] : batches) {
        total += static_cast<double>(w);
        weighted += m * static_cast<double>(w);
    }
    EXPECT_EQ(total, 1000.0);
    EXPECT_NEAR(weighted / total, ens.expect_pauli(zz).mean, 1e-12);
}

TEST(Trajectory, NoiselessIsExact) {
    Circuit c(2);
    c.h(0).cx(0, 1);
    NoiseParams p = NoiseParams::noiseless();
    p.trajectories = 1;
    TrajectoryEnsemble ens(c, p, 1);
    EXPECT_EQ(ens.expect_pauli(PauliString::parse("XX")).mean, 1.0);
    EXPECT_EQ(ens.expect_pauli(PauliString::parse("XX")).sigma, 0.0);
}

TEST(Trajectory, RejectsNonClifford) {
    Circuit c(1);
    c.rz(0, 0.3);
    EXPECT_THROW(TrajectoryEnsemble(c, NoiseParams{}, 1), NonCliffordError);
}

}  // namespace
}  // namespace encclone
