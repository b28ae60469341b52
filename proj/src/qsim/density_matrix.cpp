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

#include "encclone/density_matrix.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "encclone/error.h"
#include "encclone/statevector.h"
#include "kernels.h"

namespace encclone {

double KrausSet::trace_preservation_error() const {
    const std::size_t d = std::size_t{1} << arity;
    DenseMatrix sum(d, d);
    for (const auto &k : ops) {
        if (k.rows() != d || k.cols() != d) {
            throw InvalidArgument("Kraus operator dimension does not match arity");
        }
        sum = sum + k.adjoint() * k;
    }
    return sum.max_abs_diff(DenseMatrix::identity(d));
}

DensityMatrix::DensityMatrix(std::size_t num_qubits, std::size_t max_qubits)
    : num_qubits_(num_qubits), dim_(std::uint64_t{1} << num_qubits) {
    if (num_qubits == 0) {
        throw InvalidArgument("density matrix needs at least one qubit");
    }
    if (num_qubits > max_qubits) {
        throw CapacityError("density matrix of " + std::to_string(num_qubits) + " qubits exceeds the limit of " +
                            std::to_string(max_qubits));
    }
    data_.assign(dim_ * dim_, cplx{});
    data_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi, std::size_t max_qubits) {
    DensityMatrix rho(psi.num_qubits(), max_qubits);
    auto a = psi.amplitudes();
    for (std::uint64_t c = 0; c < rho.dim_; ++c) {
        cplx cc = std::conj(a[c]);
        for (std::uint64_t r = 0; r < rho.dim_; ++r) {
            rho.data_[r + c * rho.dim_] = a[r] * cc;
        }
    }
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
    DensityMatrix rho(num_qubits);
    rho.data_[0] = 0.0;
    for (std::uint64_t i = 0; i < rho.dim_; ++i) {
        rho.data_[i + i * rho.dim_] = 1.0 / static_cast<double>(rho.dim_);
    }
    return rho;
}

DensityMatrix DensityMatrix::from_dense(const DenseMatrix &m) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < m.rows()) {
        ++n;
    }
    if (m.rows() != m.cols() || (std::size_t{1} << n) != m.rows() || n == 0) {
        throw InvalidArgument("density matrix must be square with power-of-two dimension >= 2");
    }
    DensityMatrix rho(n, 64);
    for (std::uint64_t r = 0; r < rho.dim_; ++r) {
        for (std::uint64_t c = 0; c < rho.dim_; ++c) {
            rho.data_[r + c * rho.dim_] = m(r, c);
        }
    }
    if (std::abs(rho.trace() - 1.0) > 1e-10) {
        throw InvalidArgument("density matrix trace differs from 1");
    }
    if (rho.hermiticity_error() > 1e-10) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    return rho;
}

DenseMatrix DensityMatrix::to_dense() const {
    DenseMatrix m(dim_, dim_);
    for (std::uint64_t r = 0; r < dim_; ++r) {
        for (std::uint64_t c = 0; c < dim_; ++c) {
            m(r, c) = at(r, c);
        }
    }
    return m;
}

void DensityMatrix::check_targets(std::span<const Qubit> targets) const {
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

void DensityMatrix::apply(const Gate &gate, std::span<const Qubit> targets) {
    if (targets.size() != gate.arity()) {
        throw InvalidArgument("gate " + gate.name() + " expects " + std::to_string(gate.arity()) + " target(s)");
    }
    check_targets(targets);
    const Qubit n = static_cast<Qubit>(num_qubits_);
    switch (gate.kind) {
        case GateKind::IDLE:
        case GateKind::MEASURE:
            return;
        case GateKind::X:
            detail::apply_x(data_, targets[0]);
            detail::apply_x(data_, targets[0] + n);
            return;
        case GateKind::CNOT:
            detail::apply_cnot(data_, targets[0], targets[1]);
            detail::apply_cnot(data_, targets[0] + n, targets[1] + n);
            return;
        case GateKind::CZ:
            detail::apply_cz(data_, targets[0], targets[1]);
            detail::apply_cz(data_, targets[0] + n, targets[1] + n);
            return;
        default:
            apply_unitary(gate.matrix(), targets);
    }
}

void DensityMatrix::apply_unitary(const DenseMatrix &u, std::span<const Qubit> targets) {
    check_targets(targets);
    if (u.rows() != (std::size_t{1} << targets.size())) {
        throw InvalidArgument("unitary dimension does not match target count");
    }
    std::vector<Qubit> cols(targets.begin(), targets.end());
    for (auto &q : cols) {
        q += static_cast<Qubit>(num_qubits_);
    }
    DenseMatrix conj_u(u.rows(), u.cols());
    for (std::size_t r = 0; r < u.rows(); ++r) {
        for (std::size_t c = 0; c < u.cols(); ++c) {
            conj_u(r, c) = std::conj(u(r, c));
        }
    }
    detail::apply_matrix(data_, u, targets);
    detail::apply_matrix(data_, conj_u, cols);
}

void DensityMatrix::apply_superop(const DenseMatrix &superop, std::span<const Qubit> targets) {
    std::vector<Qubit> all(targets.begin(), targets.end());
    for (Qubit q : targets) {
        all.push_back(q + static_cast<Qubit>(num_qubits_));
    }
    detail::apply_matrix(data_, superop, all);
}

void DensityMatrix::apply_channel(const KrausSet &kraus, std::span<const Qubit> targets) {
    check_targets(targets);
    if (kraus.arity != targets.size()) {
        throw InvalidArgument("Kraus arity does not match target count");
    }
    if (kraus.ops.empty() || kraus.trace_preservation_error() > 1e-10) {
        throw InvalidArgument("Kraus set is not trace preserving");
    }
    const std::size_t d = std::size_t{1} << kraus.arity;
    DenseMatrix superop(d * d, d * d);
    for (const auto &k : kraus.ops) {
        DenseMatrix conj_k(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                conj_k(r, c) = std::conj(k(r, c));
            }
        }
        // Column index bits are the high half of the vectorised index.
        superop = superop + conj_k.kron(k);
    }
    apply_superop(superop, targets);
}

void DensityMatrix::depolarize(std::span<const Qubit> targets, double p) {
    check_targets(targets);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("depolarizing probability must lie in [0, 1]");
    }
    if (p == 0.0 || targets.empty()) {
        return;
    }
    const std::size_t k = targets.size();
    const std::uint64_t local = std::uint64_t{1} << k;
    std::vector<Qubit> all(targets.begin(), targets.end());
    for (Qubit q : targets) {
        all.push_back(q + static_cast<Qubit>(num_qubits_));
    }
    std::vector<Qubit> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> diag(local);
    for (std::uint64_t t = 0; t < local; ++t) {
        std::uint64_t off = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((t >> i) & 1) {
                off |= (std::uint64_t{1} << targets[i]) | (std::uint64_t{1} << (targets[i] + num_qubits_));
            }
        }
        diag[t] = off;
    }
    std::vector<std::uint64_t> row_off(local), col_off(local);
    for (std::uint64_t t = 0; t < local; ++t) {
        std::uint64_t r = 0, c = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((t >> i) & 1) {
                r |= std::uint64_t{1} << targets[i];
                c |= std::uint64_t{1} << (targets[i] + num_qubits_);
            }
        }
        row_off[t] = r;
        col_off[t] = c;
    }
    const double keep = 1.0 - p;
    const double spread = p / static_cast<double>(local);
    const std::uint64_t blocks = data_.size() >> (2 * k);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        std::uint64_t base = detail::deposit_bits(b, sorted);
        cplx tr = 0;
        for (std::uint64_t t = 0; t < local; ++t) {
            tr += data_[base + diag[t]];
        }
        for (std::uint64_t r = 0; r < local; ++r) {
            for (std::uint64_t c = 0; c < local; ++c) {
                cplx &v = data_[base + row_off[r] + col_off[c]];
                v *= keep;
                if (r == c) {
                    v += spread * tr;
                }
            }
        }
    }
}

double DensityMatrix::trace() const {
    double t = 0;
    for (std::uint64_t i = 0; i < dim_; ++i) {
        t += at(i, i).real();
    }
    return t;
}

double DensityMatrix::purity() const {
    double s = 0;
    for (const auto &v : data_) {
        s += std::norm(v);
    }
    return s;
}

double DensityMatrix::hermiticity_error() const {
    double m = 0;
    for (std::uint64_t r = 0; r < dim_; ++r) {
        for (std::uint64_t c = r; c < dim_; ++c) {
            m = std::max(m, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return m;
}

double DensityMatrix::expect_pauli(const PauliString &p) const {
    if (p.size() != num_qubits_) {
        throw InvalidArgument("Pauli string length does not match register size");
    }
    std::uint64_t xmask = 0, zmask = 0;
    cplx phase = p.coeff;
    for (std::size_t q = 0; q < p.ops.size(); ++q) {
        std::uint64_t bit = std::uint64_t{1} << q;
        if (p.ops[q] == Pauli::X || p.ops[q] == Pauli::Y) {
            xmask |= bit;
        }
        if (p.ops[q] == Pauli::Z || p.ops[q] == Pauli::Y) {
            zmask |= bit;
        }
        if (p.ops[q] == Pauli::Y) {
            phase *= cplx{0.0, 1.0};
        }
    }
    // tr(P rho) = sum_c <c|P... = sum_c phase(c) rho[c][c ^ x].
    cplx acc = 0;
    for (std::uint64_t c = 0; c < dim_; ++c) {
        double sign = (std::popcount(c & zmask) & 1) ? -1.0 : 1.0;
        acc += sign * at(c, c ^ xmask);
    }
    return (acc * phase).real();
}

DensityMatrix DensityMatrix::reduced(std::span<const Qubit> keep) const {
    if (keep.empty()) {
        throw InvalidArgument("reduced state needs a nonempty qubit subset");
    }
    check_targets(keep);
    const std::size_t k = keep.size();
    const std::uint64_t local = std::uint64_t{1} << k;
    std::vector<std::uint64_t> offs(local);
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
        offs[a] = off;
    }
    const std::uint64_t rest_mask = (dim_ - 1) & ~keep_mask;
    DenseMatrix out(local, local);
    std::uint64_t e = 0;
    do {
        for (std::uint64_t a = 0; a < local; ++a) {
            for (std::uint64_t b = 0; b < local; ++b) {
                out(a, b) += at(e | offs[a], e | offs[b]);
            }
        }
        e = (e - rest_mask) & rest_mask;
    } while (e != 0);
    return from_dense(out);
}

std::vector<double> DensityMatrix::probabilities(std::span<const Qubit> qubits) const {
    check_targets(qubits);
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::uint64_t i = 0; i < dim_; ++i) {
        probs[detail::gather_bits(i, qubits)] += std::max(0.0, at(i, i).real());
    }
    return probs;
}

CountsTable DensityMatrix::sample(std::span<const Qubit> qubits, std::uint64_t shots, std::uint64_t seed) const {
    if (shots == 0) {
        throw InvalidArgument("shots must be >= 1");
    }
    if (qubits.empty()) {
        throw InvalidArgument("sampling needs at least one qubit");
    }
    return sample_distribution(probabilities(qubits), qubits.size(), shots, seed);
}

double fidelity_with_pure(const DensityMatrix &rho, const StateVector &target) {
    if (rho.num_qubits() != target.num_qubits()) {
        throw InvalidArgument("fidelity: dimension mismatch (" + std::to_string(rho.num_qubits()) + " vs " +
                              std::to_string(target.num_qubits()) + " qubits)");
    }
    auto t = target.amplitudes();
    cplx acc = 0;
    for (std::uint64_t c = 0; c < rho.dim(); ++c) {
        if (t[c] == cplx{}) {
            continue;
        }
        cplx col = 0;
        for (std::uint64_t r = 0; r < rho.dim(); ++r) {
            col += std::conj(t[r]) * rho.at(r, c);
        }
        acc += col * t[c];
    }
    double f = acc.real();
    if (f < -1e-10 || f > 1.0 + 1e-10) {
        throw InvalidArgument("fidelity outside [0, 1]; state violates density-matrix invariants");
    }
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace encclone
