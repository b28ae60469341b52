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

#include "encclone/estimators.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "encclone/error.h"

namespace encclone {

std::string_view method_name(EstimateMethod m) {
    switch (m) {
        case EstimateMethod::BSM:
            return "BSM";
        case EstimateMethod::POM:
            return "POM";
        case EstimateMethod::Exact:
            return "exact";
    }
    return "?";
}

FidelityEstimate bsm_fidelity(const CountsTable &counts) {
    if (counts.total_shots == 0) {
        throw InvalidArgument("BSM fidelity needs a non-empty counts table");
    }
    if (counts.num_bits != 2) {
        throw InvalidArgument("BSM fidelity needs 2-bit counts, got " + std::to_string(counts.num_bits));
    }
    counts.validate();
    const double n = static_cast<double>(counts.total_shots);
    const double f = static_cast<double>(counts.count("00")) / n;
    return {f, std::sqrt(f * (1.0 - f) / n), EstimateMethod::BSM};
}

void append_bsm_basis(Circuit &c, Qubit a, Qubit b) {
    c.cx(a, b);
    c.h(a);
}

std::vector<PomSetting> pom_settings(std::size_t r) {
    if (r == 0) {
        throw InvalidArgument("POM needs r >= 1");
    }
    std::vector<PomSetting> out;
    out.push_back({0, 0.0, "Z"});
    for (std::size_t k = 1; k <= r; ++k) {
        const double angle = static_cast<double>(k) * kPi / static_cast<double>(r);
        out.push_back({k, angle, "M" + std::to_string(k)});
    }
    return out;
}

void append_pom_rotation(Circuit &c, std::span<const Qubit> qubits, std::size_t k, std::size_t r) {
    if (r == 0 || k == 0 || k > r) {
        throw InvalidArgument("POM setting k must lie in 1..r");
    }
    const double angle = static_cast<double>(k) * kPi / static_cast<double>(r);
    for (Qubit q : qubits) {
        c.rz(q, -angle);
        c.h(q);
    }
}

std::vector<WeightedPauli> pom_pauli_expansion(std::size_t num_qubits, std::span<const Qubit> qubits, std::size_t k,
                                               std::size_t r) {
    if (r == 0 || k == 0 || k > r) {
        throw InvalidArgument("POM setting k must lie in 1..r");
    }
    if (qubits.size() > 24) {
        throw CapacityError("Pauli expansion of a POM setting is limited to 24 qubits");
    }
    const double angle = static_cast<double>(k) * kPi / static_cast<double>(r);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const std::size_t m = qubits.size();
    std::vector<WeightedPauli> out;
    for (std::uint64_t ys = 0; ys < (std::uint64_t{1} << m); ++ys) {
        const int ny = std::popcount(ys);
        const double w = std::pow(c, static_cast<double>(static_cast<int>(m) - ny)) * std::pow(s, ny);
        if (std::abs(w) < 1e-12) {
            continue;
        }
        WeightedPauli term;
        term.weight = w;
        term.pauli = PauliString(num_qubits);
        for (std::size_t i = 0; i < m; ++i) {
            term.pauli.ops[qubits[i]] = ((ys >> i) & 1) ? Pauli::Y : Pauli::X;
        }
        out.push_back(std::move(term));
    }
    return out;
}

double parity_expectation(const CountsTable &counts) {
    if (counts.total_shots == 0) {
        throw InvalidArgument("parity of an empty counts table");
    }
    double acc = 0;
    for (const auto &[key, n] : counts.counts) {
        const auto ones = std::count(key.begin(), key.end(), '1');
        acc += (ones % 2 ? -1.0 : 1.0) * static_cast<double>(n);
    }
    return acc / static_cast<double>(counts.total_shots);
}

FidelityEstimate pom_fidelity(const POMData &data) {
    if (data.r == 0 || data.e_k.size() != data.r) {
        throw InvalidArgument("POM data needs exactly r = " + std::to_string(data.r) + " setting expectations, got " +
                              std::to_string(data.e_k.size()));
    }
    if (data.z_counts.total_shots == 0 || data.shots_per_setting == 0) {
        throw InvalidArgument("POM data has no shots");
    }
    if (data.z_counts.num_bits != data.r) {
        throw InvalidArgument("POM population counts must cover r bits");
    }
    const double nz = static_cast<double>(data.z_counts.total_shots);
    const double p0 = data.z_counts.frequency(std::string(data.r, '0'));
    const double p1 = data.z_counts.frequency(std::string(data.r, '1'));
    const double rr = static_cast<double>(data.r);
    const double ns = static_cast<double>(data.shots_per_setting);
    double chi = 0;
    double var_chi = 0;
    for (std::size_t k = 1; k <= data.r; ++k) {
        const double e = data.e_k[k - 1];
        if (std::abs(e) > 1.0 + 1e-12) {
            throw InvalidArgument("POM expectation outside [-1, 1]");
        }
        chi += (k % 2 ? -1.0 : 1.0) * e;
        var_chi += 1.0 - e * e;
    }
    chi /= rr;
    var_chi /= rr * rr * ns;
    const double var_p = (p0 * (1.0 - p0) + p1 * (1.0 - p1)) / nz;
    const double f = (p0 + p1 + chi) / 2.0;
    // The published combination sqrt(Var P + Var chi); it is twice the
    // delta-method error of (P + chi)/2 and so errs on the wide side.
    return {std::clamp(f, 0.0, 1.0), std::sqrt(var_p + var_chi), EstimateMethod::POM};
}

FidelityEstimate pom_fidelity_exact(double p_zeros, double p_ones, std::span<const double> e_k) {
    if (e_k.empty()) {
        throw InvalidArgument("POM needs r >= 1 expectations");
    }
    double chi = 0;
    for (std::size_t k = 1; k <= e_k.size(); ++k) {
        chi += (k % 2 ? -1.0 : 1.0) * e_k[k - 1];
    }
    chi /= static_cast<double>(e_k.size());
    return {std::clamp((p_zeros + p_ones + chi) / 2.0, 0.0, 1.0), 0.0, EstimateMethod::Exact};
}

CHSHEstimate chsh_from_terms(const std::array<double, 4> &terms, const std::array<double, 4> &sigmas) {
    CHSHEstimate out;
    out.terms = terms;
    out.s = terms[0] + terms[1] + terms[2] - terms[3];
    double var = 0;
    for (double s : sigmas) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            throw InvalidArgument("CHSH term sigma must be finite and non-negative");
        }
        var += s * s;
    }
    out.sigma = std::sqrt(var);
    return out;
}

CHSHEstimate chsh_from_correlators(const std::array<double, 4> &c, const std::array<double, 4> &s) {
    const double r = kInvSqrt2;
    CHSHEstimate out;
    out.terms = {(c[0] + c[1]) * r, (c[0] - c[1]) * r, (c[2] + c[3]) * r, (c[2] - c[3]) * r};
    out.s = out.terms[0] + out.terms[1] + out.terms[2] - out.terms[3];
    // ZX and XZ cancel in S.
    out.sigma = kSqrt2 * std::sqrt(s[0] * s[0] + s[3] * s[3]);
    return out;
}

double correlator_sigma(double e, std::uint64_t shots) {
    if (shots == 0) {
        throw InvalidArgument("shots must be >= 1");
    }
    return std::sqrt(std::max(0.0, 1.0 - e * e) / static_cast<double>(shots));
}

double chsh_angle(std::size_t term) {
    if (term > 3) {
        throw OutOfRange("CHSH term index must lie in 0..3");
    }
    return term % 2 == 0 ? kPi / 4 : -kPi / 4;
}

void append_ry(Circuit &c, Qubit q, double theta) {
    c.sdg(q);
    c.h(q);
    c.rz(q, theta);
    c.h(q);
    c.s(q);
}

std::string_view classification_name(Classification c) {
    switch (c) {
        case Classification::Witnessed:
            return "witnessed";
        case Classification::AboveFloor:
            return "above-floor";
        case Classification::AtFloor:
            return "at-floor";
    }
    return "?";
}

Classification witness_and_floor(const FidelityEstimate &f, std::size_t r) {
    if (r == 0) {
        throw InvalidArgument("witness classification needs r >= 1");
    }
    if (f.value > 0.5) {
        return Classification::Witnessed;
    }
    if (f.value > std::ldexp(1.0, -static_cast<int>(r))) {
        return Classification::AboveFloor;
    }
    return Classification::AtFloor;
}

}  // namespace encclone
