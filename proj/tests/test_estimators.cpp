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


#include <bit>
#include <cmath>
#include <complex>
#include <random>

#include "encclone/counts.h"
#include "encclone/error.h"
#include "encclone/estimators.h"
#include "encclone/execute.h"
#include "encclone/protocol.h"
#include "encclone/statevector.h"
#include "gtest/gtest.h"

namespace encclone {
namespace {

using C = std::complex<double>;

StateVector random_state(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<cplx> v(std::size_t{1} << n);
    double norm = 0;
    for (auto &a : v) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(v);
}

// <psi| (cos a X + sin a Y)^{x r} |psi> on the listed qubits, computed from
// the action of the single-qubit operator e^{-ia}|0><1| + e^{ia}|1><0|.
double equatorial_expectation(const StateVector &psi, const std::vector<Qubit> &qubits, double a) {
    std::uint64_t mask = 0;
    for (Qubit q : qubits) {
        mask |= std::uint64_t{1} << q;
    }
    C sum = 0;
    for (std::uint64_t k = 0; k < psi.dim(); ++k) {
        // Operator maps |k> -> phase |k ^ mask>; the phase is e^{ia} per qubit
        // flipped 0 -> 1 and e^{-ia} per qubit flipped 1 -> 0.
        const int ones = std::popcount(k & mask);
        const int zeros = static_cast<int>(qubits.size()) - ones;
        const C phase = std::exp(C(0, a * (zeros - ones)));
        sum += std::conj(psi.amplitude(k ^ mask)) * phase * psi.amplitude(k);
    }
    return sum.real();
}

double parity(const std::vector<double> &probs) {
    double e = 0;
    for (std::size_t x = 0; x < probs.size(); ++x) {
        e += (std::popcount(x) % 2 ? -1.0 : 1.0) * probs[x];
    }
    return e;
}

TEST(Bsm, FidelityAndSigma) {
    CountsTable c;
    c.num_bits = 2;
    c.add(0, 900);
    c.add(3, 100);
    FidelityEstimate f = bsm_fidelity(c);
    EXPECT_DOUBLE_EQ(f.value, 0.9);
    EXPECT_NEAR(f.sigma, std::sqrt(0.9 * 0.1 / 1000), 1e-15);
    EXPECT_EQ(f.method, EstimateMethod::BSM);
}

TEST(Bsm, BasisMapsBellToZeros) {
    Circuit c(2);
    c.h(0).cx(0, 1);
    append_bsm_basis(c, 0, 1);
    StateVector psi = run_statevector(c);
    EXPECT_NEAR(std::norm(psi.amplitude(0)), 1.0, 1e-12);
}

TEST(Bsm, RejectsWrongWidth) {
    CountsTable c;
    c.num_bits = 3;
    c.add(0, 10);
    EXPECT_THROW(bsm_fidelity(c), InvalidArgument);
}

TEST(Pom, RotationMeasuresEquatorialSetting) {
    const std::vector<Qubit> qs{0, 2, 3};
    const std::size_t r = qs.size();
    StateVector psi = random_state(4, 21);
    for (std::size_t k = 1; k <= r; ++k) {
        Circuit rot(4);
        append_pom_rotation(rot, qs, k, r);
        StateVector rotated = psi;
        apply_circuit(rotated, rot);
        const double want = equatorial_expectation(psi, qs, static_cast<double>(k) * kPi / static_cast<double>(r));
        EXPECT_NEAR(parity(rotated.probabilities(qs)), want, 1e-12) << "k = " << k;
    }
}

TEST(Pom, PauliExpansionMatchesSetting) {
    const std::vector<Qubit> qs{1, 3};
    StateVector psi = random_state(4, 8);
    for (std::size_t r : {2, 3}) {
        std::vector<Qubit> use(qs.begin(), qs.end());
        if (r == 3) {
            use.push_back(0);
        }
        for (std::size_t k = 1; k <= r; ++k) {
            double sum = 0;
            for (const auto &wp : pom_pauli_expansion(4, use, k, r)) {
                sum += wp.weight * psi.expect_pauli(wp.pauli);
            }
            const double want = equatorial_expectation(psi, use, static_cast<double>(k) * kPi / static_cast<double>(r));
            EXPECT_NEAR(sum, want, 1e-12);
        }
    }
}

TEST(Pom, ExactFidelityOfGhzAndProductStates) {
    const std::vector<double> ghz_e{-1.0, 1.0, -1.0};
    EXPECT_NEAR(pom_fidelity_exact(0.5, 0.5, ghz_e).value, 1.0, 1e-15);
    const std::vector<double> zero_e{0.0, 0.0, 0.0};
    EXPECT_NEAR(pom_fidelity_exact(1.0, 0.0, zero_e).value, 0.5, 1e-15);
}

TEST(Pom, SampledFidelityAndSigma) {
    POMData d;
    d.r = 2;
    d.shots_per_setting = 1000;
    d.z_counts.num_bits = 2;
    d.z_counts.add(0, 450);
    d.z_counts.add(3, 450);
    d.z_counts.add(1, 100);
    d.e_k = {-0.8, 0.6};
    FidelityEstimate f = pom_fidelity(d);
    EXPECT_NEAR(f.value, (0.9 + (0.8 + 0.6) / 2) / 2, 1e-12);
    const double var_p = (0.45 * 0.55 * 2) / 1000;
    const double var_chi = ((1 - 0.64) + (1 - 0.36)) / (4.0 * 1000);
    EXPECT_NEAR(f.sigma, std::sqrt(var_p + var_chi), 1e-12);
}

TEST(Pom, SettingsList) {
    auto s = pom_settings(3);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0].label, "Z");
    EXPECT_NEAR(s[2].angle, 2 * kPi / 3, 1e-15);
    EXPECT_THROW(pom_settings(0), InvalidArgument);
}

// Measuring after RY(-theta) reads cos(theta) Z + sin(theta) X; on |+> that is
// sin(theta), which fixes the sign convention.
TEST(Chsh, RotationSign) {
    for (double theta : {kPi / 4, -kPi / 4, 0.3}) {
        Circuit c(1);
        c.h(0);
        append_ry(c, 0, -theta);
        StateVector psi = run_statevector(c);
        const Qubit q[1] = {0};
        EXPECT_NEAR(parity(psi.probabilities(q)), std::sin(theta), 1e-12);
    }
}

TEST(Chsh, BellStateReachesTsirelson) {
    CHSHEstimate s = chsh_from_correlators({1.0, 0.0, 0.0, 1.0}, {0, 0, 0, 0});
    EXPECT_NEAR(s.s, 2 * std::sqrt(2.0), 1e-12);
    const double t = 1 / std::sqrt(2.0);
    CHSHEstimate direct = chsh_from_terms({t, t, t, -t}, {0.01, 0.01, 0.01, 0.01});
    EXPECT_NEAR(direct.s, 2 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(direct.sigma, 0.02, 1e-12);
}

TEST(Chsh, CorrelatorSigma) {
    EXPECT_NEAR(correlator_sigma(0.0, 100), 0.1, 1e-15);
    EXPECT_EQ(correlator_sigma(1.0, 100), 0.0);
}

TEST(Witness, Thresholds) {
    EXPECT_EQ(witness_and_floor({0.51, 0, EstimateMethod::POM}, 3), Classification::Witnessed);
    EXPECT_EQ(witness_and_floor({0.5, 0, EstimateMethod::POM}, 3), Classification::AboveFloor);
    EXPECT_EQ(witness_and_floor({0.126, 0, EstimateMethod::POM}, 3), Classification::AboveFloor);
    EXPECT_EQ(witness_and_floor({0.125, 0, EstimateMethod::POM}, 3), Classification::AtFloor);
}

TEST(Parity, FromCounts) {
    CountsTable c;
    c.num_bits = 2;
    c.add(0, 3);
    c.add(1, 1);
    EXPECT_DOUBLE_EQ(parity_expectation(c), 0.5);
}

}  // namespace
}  // namespace encclone
