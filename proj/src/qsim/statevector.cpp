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

#include "encclone/statevector.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "encclone/density_matrix.h"
#include "encclone/error.h"
#include "encclone/rng.h"
#include "kernels.h"

namespace encclone {

namespace {

detail::PauliMasks pauli_masks(const PauliString &p) {
    detail::PauliMasks m;
    m.phase = p.coeff;
    for (std::size_t q = 0; q < p.ops.size(); ++q) {
        std::uint64_t bit = std::uint64_t{1} << q;
        switch (p.ops[q]) {
            case Pauli::I:
                break;
            case Pauli::X:
                m.xmask |= bit;
                break;
            case Pauli::Y:
                m.xmask |= bit;
                m.zmask |= bit;
                m.phase *= cplx{0.0, 1.0};
                break;
            case Pauli::Z:
                m.zmask |= bit;
                break;
        }
    }
    return m;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::size_t max_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw InvalidArgument("statevector needs at least one qubit");
    }
    if (num_qubits > max_qubits) {
        throw CapacityError("statevector of " + std::to_string(num_qubits) + " qubits exceeds the limit of " +
                            std::to_string(max_qubits));
    }
    amps_.assign(std::uint64_t{1} << num_qubits, cplx{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amplitudes.size()) {
        ++n;
    }
    if (n == 0 || (std::size_t{1} << n) != amplitudes.size()) {
        throw InvalidArgument("amplitude count must be a power of two >= 2");
    }
    StateVector sv;
    sv.num_qubits_ = n;
    sv.amps_ = std::move(amplitudes);
    if (std::abs(sv.norm_squared() - 1.0) > 1e-12) {
        throw InvalidArgument("amplitudes are not normalised");
    }
    return sv;
}

void StateVector::check_targets(std::span<const Qubit> targets) const {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] >= num_qubits_) {
            throw OutOfRange("qubit " + std::to_string(targets[i]) + " out of range for " +
                             std::to_string(num_qubits_) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (targets[i] == targets[j]) {
                throw InvalidArgument("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
}

void StateVector::apply(const Gate &gate, std::span<const Qubit> targets) {
    if (targets.size() != gate.arity()) {
        throw InvalidArgument("gate " + gate.name() + " expects " + std::to_string(gate.arity()) + " target(s), got " +
                              std::to_string(targets.size()));
    }
    check_targets(targets);
    const cplx i{0.0, 1.0};
    switch (gate.kind) {
        case GateKind::X:
            detail::apply_x(amps_, targets[0]);
            return;
        case GateKind::Z:
            detail::apply_diag_1q(amps_, 1.0, -1.0, targets[0]);
            return;
        case GateKind::S:
            detail::apply_diag_1q(amps_, 1.0, i, targets[0]);
            return;
        case GateKind::Sdg:
            detail::apply_diag_1q(amps_, 1.0, -i, targets[0]);
            return;
        case GateKind::RZ:
            detail::apply_diag_1q(amps_, std::exp(-i * gate.param / 2.0), std::exp(i * gate.param / 2.0), targets[0]);
            return;
        case GateKind::CNOT:
            detail::apply_cnot(amps_, targets[0], targets[1]);
            return;
        case GateKind::CZ:
            detail::apply_cz(amps_, targets[0], targets[1]);
            return;
        case GateKind::H:
            detail::apply_h(amps_, targets[0]);
            return;
        case GateKind::SX: {
            DenseMatrix m = gate.matrix();
            detail::apply_1q(amps_, m.data().data(), targets[0]);
            return;
        }
        case GateKind::IDLE:
        case GateKind::MEASURE:
            return;
    }
}

void StateVector::apply_1q(const DenseMatrix &m, Qubit q) {
    Qubit t[1] = {q};
    check_targets(t);
    detail::apply_1q(amps_, m.data().data(), q);
}

void StateVector::apply_2q(const DenseMatrix &m, Qubit q0, Qubit q1) {
    Qubit t[2] = {q0, q1};
    apply_matrix(m, t);
}

void StateVector::apply_matrix(const DenseMatrix &m, std::span<const Qubit> targets) {
    check_targets(targets);
    if (m.rows() != (std::size_t{1} << targets.size()) || m.cols() != m.rows()) {
        throw InvalidArgument("matrix dimension does not match target count");
    }
    detail::apply_matrix(amps_, m, targets);
}

void StateVector::apply_pauli(const PauliString &p) {
    if (p.size() != num_qubits_) {
        throw InvalidArgument("Pauli string length does not match register size");
    }
    auto m = pauli_masks(p);
    std::vector<cplx> out(amps_.size());
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
        double sign = (std::popcount(k & m.zmask) & 1) ? -1.0 : 1.0;
        out[k ^ m.xmask] = m.phase * sign * amps_[k];
    }
    amps_ = std::move(out);
}

double StateVector::norm_squared() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

double StateVector::expect_pauli(const PauliString &p) const {
    if (p.size() != num_qubits_) {
        throw InvalidArgument("Pauli string length " + std::to_string(p.size()) + " does not match register size " +
                              std::to_string(num_qubits_));
    }
    auto m = pauli_masks(p);
    cplx acc = 0;
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
        double sign = (std::popcount(k & m.zmask) & 1) ? -1.0 : 1.0;
        acc += std::conj(amps_[k ^ m.xmask]) * sign * amps_[k];
    }
    return (acc * m.phase).real();
}

cplx StateVector::inner(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw InvalidArgument("inner product of states with different sizes");
    }
    cplx acc = 0;
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
        acc += std::conj(amps_[k]) * other.amps_[k];
    }
    return acc;
}

DensityMatrix StateVector::reduced(std::span<const Qubit> keep) const {
    if (keep.empty()) {
        throw InvalidArgument("reduced state needs a nonempty qubit subset");
    }
    check_targets(keep);
    const std::size_t k = keep.size();
    const std::uint64_t local = std::uint64_t{1} << k;
    std::vector<std::uint64_t> keep_offsets(local);
    std::uint64_t keep_mask = 0;
    for (Qubit q : keep) {
        keep_mask |= std::uint64_t{1} << q;
    }
    for (std::uint64_t a = 0; a < local; ++a) {
        std::uint64_t off = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((a >> i) & 1) {
                off |= std::uint64_t{1} << keep[i];
            }
        }
        keep_offsets[a] = off;
    }
    const std::uint64_t rest_mask = (dim() - 1) & ~keep_mask;
    DenseMatrix rho(local, local);
    std::vector<cplx> v(local);
    std::uint64_t e = 0;
    do {
        for (std::uint64_t a = 0; a < local; ++a) {
            v[a] = amps_[e | keep_offsets[a]];
        }
        for (std::uint64_t a = 0; a < local; ++a) {
            if (v[a] == cplx{}) {
                continue;
            }
            for (std::uint64_t b = 0; b < local; ++b) {
                rho(a, b) += v[a] * std::conj(v[b]);
            }
        }
        e = (e - rest_mask) & rest_mask;
    } while (e != 0);
    return DensityMatrix::from_dense(rho);
}

std::vector<double> StateVector::probabilities(std::span<const Qubit> qubits) const {
    check_targets(qubits);
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::uint64_t k = 0; k < amps_.size(); ++k) {
        probs[detail::gather_bits(k, qubits)] += std::norm(amps_[k]);
    }
    return probs;
}

CountsTable StateVector::sample(std::span<const Qubit> qubits, std::uint64_t shots, std::uint64_t seed) const {
    if (shots == 0) {
        throw InvalidArgument("shots must be >= 1");
    }
    if (qubits.empty()) {
        throw InvalidArgument("sampling needs at least one qubit");
    }
    return sample_distribution(probabilities(qubits), qubits.size(), shots, seed);
}

CountsTable sample_distribution(const std::vector<double> &probs, std::size_t num_bits, std::uint64_t shots,
                                std::uint64_t seed) {
    if (shots == 0) {
        throw InvalidArgument("shots must be >= 1");
    }
    std::vector<double> cumulative(probs.size());
    double total = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        total += std::max(0.0, probs[i]);
        cumulative[i] = total;
    }
    if (!(total > 0.0)) {
        throw InvalidArgument("cannot sample from an all-zero distribution");
    }
    std::size_t last_nonzero = probs.size() - 1;
    while (probs[last_nonzero] <= 0.0) {
        --last_nonzero;
    }
    Rng rng(seed);
    std::vector<std::uint64_t> hist(probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = uniform01(rng) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
        ++hist[std::min(idx, last_nonzero)];
    }
    CountsTable table;
    table.num_bits = num_bits;
    table.seed = seed;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        if (hist[i] > 0) {
            table.add(i, hist[i]);
        }
    }
    return table;
}

}  // namespace encclone
