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
#include <complex>
#include <bit>
#include <random>

#include "encclone/error.h"
#include "encclone/execute.h"
#include "encclone/protocol.h"
#include "encclone/pauli.h"
#include "encclone/statevector.h"
#include "encclone/tableau.h"
#include "gtest/gtest.h"

namespace encclone {
namespace {

using C = std::complex<double>;

// exp(-i pi/4 P) = (I - i P)/sqrt(2) for P = X..X or Z..Z on `qubits`,
// applied directly to amplitudes.
std::vector<C> quarter_turn(const std::vector<C> &v, const std::vector<Qubit> &qubits, bool x_type) {
    std::uint64_t mask = 0;
    for (Qubit q : qubits) {
        mask |= std::uint64_t{1} << q;
    }
    std::vector<C> out(v.size());
    const C mi{0, -1};
    for (std::uint64_t k = 0; k < v.size(); ++k) {
        C pv = x_type ? v[k ^ mask] : v[k] * (std::popcount(k & mask) % 2 ? -1.0 : 1.0);
        out[k] = (v[k] + mi * pv) / std::sqrt(2.0);
    }
    return out;
}

std::vector<C> random_state(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<C> v(std::size_t{1} << n);
    double norm = 0;
    for (auto &a : v) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

// <Phi+| rho_ab |Phi+> from amplitudes.
double bell_overlap(const StateVector &psi, Qubit a, Qubit b) {
    const std::uint64_t ma = std::uint64_t{1} << a, mb = std::uint64_t{1} << b;
    double f = 0;
    for (std::uint64_t k = 0; k < psi.dim(); ++k) {
        if ((k & ma) || (k & mb)) {
            continue;
        }
        const C s = psi.amplitude(k) + psi.amplitude(k | ma | mb);
        f += std::norm(s) / 2.0;
    }
    return f;
}

TEST(Encryption, MatchesExponentialsOnRandomStates) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Qubit> all;
        for (Qubit q = 0; q <= n; ++q) {
            all.push_back(q);
        }
        std::vector<Qubit> signals(all.begin() + 1, all.end());
        Circuit c(n + 1);
        append_encryption(c, 0, signals);
        auto v = random_state(n + 1, n);
        StateVector psi = StateVector::from_amplitudes(v);
        apply_circuit(psi, c);
        auto want = quarter_turn(quarter_turn(v, all, false), all, true);
        // Compare up to a global phase.
        C overlap = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            overlap += std::conj(want[k]) * psi.amplitude(k);
        }
        EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12) << "n = " << n;
    }
}

TEST(Encryption, TwoQubitGateCount) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const QubitLayout layout = standard_layout(n);
        EXPECT_EQ(layer_metrics(build_encryption(n, layout)).two_qubit_gates, 4 * n);
    }
}

TEST(Pipeline, RecoversEveryCloneChoice) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t j = 1; j <= n; ++j) {
            Pipeline p = build_pipeline(n, j);
            StateVector psi = run_statevector(p.circuit);
            EXPECT_NEAR(bell_overlap(psi, p.ancilla, p.recovered), 1.0, 1e-10) << "n=" << n << " j=" << j;
        }
    }
}

TEST(Pipeline, RejectsBadClone) {
    EXPECT_THROW(build_pipeline(3, 0), OutOfRange);
    EXPECT_THROW(build_pipeline(3, 4), OutOfRange);
    EXPECT_THROW(build_pipeline(0, 1), InvalidArgument);
}

TEST(Pipeline, EncryptedClonesCarryNoInformation) {
    const std::size_t n = 3;
    const QubitLayout layout = standard_layout(n);
    Circuit enc(layout.size());
    append_bell_prep(enc, 0, 1);
    for (Qubit i = 1; i <= n; ++i) {
        append_bell_prep(enc, 2 * i, 2 * i + 1);
    }
    enc.append(build_encryption(n, layout));
    StateVector psi = run_statevector(enc);
    for (Qubit i = 1; i <= n; ++i) {
        EXPECT_NEAR(bell_overlap(psi, 0, 2 * i), 0.25, 1e-12);
    }
}

TEST(Pipeline, IncompleteKeyDoesNotDecrypt) {
    const std::size_t n = 3;
    const QubitLayout layout = standard_layout(n);
    Circuit c(layout.size());
    append_bell_prep(c, 0, 1);
    for (Qubit i = 1; i <= n; ++i) {
        append_bell_prep(c, 2 * i, 2 * i + 1);
    }
    c.append(build_encryption(n, layout));
    const Qubit others[1] = {5};  // N_2 only; N_3 withheld
    append_decryption(c, 2, 3, others, n);
    StateVector psi = run_statevector(c);
    EXPECT_LT(bell_overlap(psi, 0, 2), 0.9);
}

TEST(Layout, StandardRolesAndParsing) {
    QubitLayout l = standard_layout(2);
    EXPECT_EQ(l.size(), 6u);
    EXPECT_EQ(l.role(0).str(), "Atilde");
    EXPECT_EQ(l.role(4).str(), "S2");
    EXPECT_EQ(Role::parse("N2@1.4"), (Role{RoleKind::Noise, 2, 1, 4}));
    EXPECT_EQ(Role::parse(Role{RoleKind::Signal, 3, 2, 7}.str()), (Role{RoleKind::Signal, 3, 2, 7}));
    EXPECT_THROW(l.add(l.role(1)), InvalidArgument);
}

TEST(Iterated, CountingLaws) {
    for (std::size_t l = 0; l <= 4; ++l) {
        EXPECT_EQ(iterated_clone_count(2, l), static_cast<std::size_t>(std::pow(3, l + 1)));
        EXPECT_EQ(iterated_key_size(2, l), 2 * (l + 1));
        EXPECT_EQ(iterated_clone_count(4, l), static_cast<std::size_t>(std::pow(5, l + 1)));
    }
}

TEST(Iterated, FullPlansQubitTotals) {
    const std::size_t want[3] = {6, 18, 54};
    for (std::size_t l = 0; l <= 2; ++l) {
        IterationPlan p = plan_iterated({2, l, IterationStrategy::Full, 0, false});
        EXPECT_EQ(p.total_qubits, want[l]);
        EXPECT_EQ(p.clone_count, iterated_clone_count(2, l));
        EXPECT_EQ(p.key_size, 2 * (l + 1));
        EXPECT_EQ(p.decryption_key.size(), p.key_size);
    }
}

TEST(Iterated, SingleBranchGrowsLinearly) {
    for (std::size_t l = 0; l <= 5; ++l) {
        IterationPlan p = plan_iterated({2, l, IterationStrategy::SingleBranch, 0, false});
        EXPECT_EQ(p.total_qubits, 6 + 4 * l);
        EXPECT_EQ(p.virtual_clone_count, static_cast<std::size_t>(std::pow(3, l + 1)));
    }
}

TEST(Iterated, RecoversOnStateVectorWhenSmall) {
    for (auto strategy : {IterationStrategy::Full, IterationStrategy::SingleBranch}) {
        IterationPlan p = plan_iterated({2, 1, strategy, 0, false});
        StateVector psi = run_statevector(p.circuit);
        EXPECT_NEAR(bell_overlap(psi, p.ancilla, p.recovered), 1.0, 1e-10);
    }
}

TEST(Iterated, RecoversOnTableauAtScale) {
    for (std::size_t extra : {0, 11, 25}) {
        IterationPlan p = plan_iterated({2, 2, IterationStrategy::Full, extra, false});
        Tableau t = run_tableau(p.circuit);
        const std::size_t n = p.total_qubits;
        EXPECT_EQ(t.expect_pauli(PauliString::sparse(n, {{p.ancilla, Pauli::X}, {p.recovered, Pauli::X}})), 1);
        EXPECT_EQ(t.expect_pauli(PauliString::sparse(n, {{p.ancilla, Pauli::Z}, {p.recovered, Pauli::Z}})), 1);
    }
}

TEST(Iterated, ExtraSubsetControlsDecryptedGeneration) {
    IterationPlan after = plan_iterated({2, 2, IterationStrategy::Full, 11, false});
    IterationPlan before = plan_iterated({2, 2, IterationStrategy::Full, 11, true});
    EXPECT_EQ(after.total_qubits, 98u);
    EXPECT_EQ(after.key_size, 8u);
    EXPECT_EQ(before.key_size, 6u);
    EXPECT_EQ(plan_iterated({2, 2, IterationStrategy::Full, 25, false}).total_qubits, 154u);
}

TEST(Iterated, RejectsUnsupportedRequests) {
    EXPECT_THROW(plan_iterated({3, 1, IterationStrategy::Full, 0, false}), InvalidArgument);
    EXPECT_THROW(plan_iterated({2, 1, IterationStrategy::SingleBranch, 2, false}), InvalidArgument);
}

TEST(Experiment4, RecoversGhzOnEverySignal) {
    for (std::size_t r = 1; r <= 3; ++r) {
        Experiment4Circuit ex = build_experiment4(r);
        EXPECT_EQ(ex.circuit.num_qubits(), 5 * r);
        StateVector psi = run_statevector(ex.circuit);
        // GHZ overlap: |<0..0|psi_red> + <1..1|psi_red>|^2 / 2 summed over the rest.
        std::uint64_t mask = 0;
        for (Qubit q : ex.recovered) {
            mask |= std::uint64_t{1} << q;
        }
        double f = 0;
        for (std::uint64_t k = 0; k < psi.dim(); ++k) {
            if (k & mask) {
                continue;
            }
            f += std::norm(psi.amplitude(k) + psi.amplitude(k | mask)) / 2.0;
        }
        EXPECT_NEAR(f, 1.0, 1e-10) << "r = " << r;
    }
}

}  // namespace
}  // namespace encclone
