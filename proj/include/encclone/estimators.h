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

#ifndef ENCCLONE_ESTIMATORS_H
#define ENCCLONE_ESTIMATORS_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "encclone/circuit.h"
#include "encclone/counts.h"
#include "encclone/pauli.h"

namespace encclone {

enum class EstimateMethod : std::uint8_t { BSM, POM, Exact };
std::string_view method_name(EstimateMethod m);

struct FidelityEstimate {
    double value = 0.0;
    double sigma = 0.0;
    EstimateMethod method = EstimateMethod::Exact;
};

/// F = N_00 / N, sigma = sqrt(F (1 - F) / N). Expects the 2-bit counts taken
/// after the CNOT + H disentangler of append_bsm_basis.
FidelityEstimate bsm_fidelity(const CountsTable &counts);

/// CNOT(a, b) then H(a): maps the Bell state (|00> + |11>)/sqrt(2) to |00>.
void append_bsm_basis(Circuit &c, Qubit a, Qubit b);

/// One equatorial parity setting M_k = [cos(k pi/r) X + sin(k pi/r) Y]^{x r}.
struct PomSetting {
    std::size_t k = 0;  // 0 denotes the Z-basis population setting
    double angle = 0.0;
    std::string label;
};

/// The Z setting followed by M_1..M_r: r + 1 settings.
std::vector<PomSetting> pom_settings(std::size_t r);

/// Basis change before Z readout so that the parity of the outcome measures
/// M_k: RZ(-k pi/r) then H on every qubit.
void append_pom_rotation(Circuit &c, std::span<const Qubit> qubits, std::size_t k, std::size_t r);

/// M_k expanded into Pauli strings over X/Y on `qubits` of an n-qubit register.
/// Terms with vanishing weight are dropped.
struct WeightedPauli {
    double weight = 0.0;
    PauliString pauli;
};
std::vector<WeightedPauli> pom_pauli_expansion(std::size_t num_qubits, std::span<const Qubit> qubits, std::size_t k,
                                               std::size_t r);

struct POMData {
    CountsTable z_counts;
    std::vector<double> e_k;  // E_1..E_r
    std::uint64_t shots_per_setting = 0;
    std::size_t r = 0;
};

/// Parity expectation <(-1)^{|x|}> of a counts table.
double parity_expectation(const CountsTable &counts);

/// F = (P + chi)/2 with P = p_0...0 + p_1...1, chi = (1/r) sum_k (-1)^k E_k.
/// sigma^2 = [p0(1-p0) + p1(1-p1)]/N + sum_k (1 - E_k^2)/(r^2 N).
FidelityEstimate pom_fidelity(const POMData &data);
/// Same combination from exact populations and expectations; sigma = 0.
FidelityEstimate pom_fidelity_exact(double p_zeros, double p_ones, std::span<const double> e_k);

/// The four CHSH terms <Z (Z+X)/sqrt2>, <Z (Z-X)/sqrt2>, <X (Z+X)/sqrt2>,
/// <X (Z-X)/sqrt2>; S = t0 + t1 + t2 - t3.
struct CHSHEstimate {
    double s = 0.0;
    double sigma = 0.0;
    std::array<double, 4> terms{};
};

/// Terms with independent standard errors.
CHSHEstimate chsh_from_terms(const std::array<double, 4> &terms, const std::array<double, 4> &sigmas);
/// From the Pauli correlators ZZ, ZX, XZ, XX (first letter on the reference
/// qubit) and their standard errors.
CHSHEstimate chsh_from_correlators(const std::array<double, 4> &zz_zx_xz_xx, const std::array<double, 4> &sigmas);
/// Standard error of a +-1 correlator estimated from N shots.
double correlator_sigma(double e, std::uint64_t shots);

/// Angle of the reference-free measurement axis for term t: the qubit measures
/// cos(theta) Z + sin(theta) X with theta = +pi/4 (t even) or -pi/4 (t odd).
double chsh_angle(std::size_t term);
/// RY(theta) as Sdg, H, RZ(theta), H, S in time order.
void append_ry(Circuit &c, Qubit q, double theta);

enum class Classification : std::uint8_t { Witnessed, AboveFloor, AtFloor };
std::string_view classification_name(Classification c);

/// Witnessed when F > 1/2, above the floor when F > 2^-r, otherwise at the floor.
Classification witness_and_floor(const FidelityEstimate &f, std::size_t r);

}  // namespace encclone

#endif
