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

#ifndef ENCCLONE_SRC_QSIM_KERNELS_H
#define ENCCLONE_SRC_QSIM_KERNELS_H

// Amplitude-array kernels shared by the statevector and density-matrix engines.
// The density matrix reuses them on its vectorised 2n-qubit representation.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "encclone/dense_matrix.h"
#include "encclone/types.h"

namespace encclone::detail {

/// Index with the bits of `value` deposited at the given ascending positions.
inline std::uint64_t deposit_bits(std::uint64_t value, std::span<const Qubit> sorted_positions) {
    std::uint64_t out = value;
    for (Qubit p : sorted_positions) {
        std::uint64_t low = out & ((std::uint64_t{1} << p) - 1);
        out = ((out >> p) << (p + 1)) | low;
    }
    return out;
}

inline std::uint64_t gather_bits(std::uint64_t index, std::span<const Qubit> positions) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        out |= ((index >> positions[i]) & 1) << i;
    }
    return out;
}

// Complex product without the NaN/Inf recovery of operator*, which keeps the
// inner loops vectorisable.
inline cplx cmul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline void apply_1q(std::span<cplx> amps, const cplx m[4], Qubit q) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    const std::uint64_t dim = amps.size();
    const cplx m0 = m[0], m1 = m[1], m2 = m[2], m3 = m[3];
    for (std::uint64_t hi = 0; hi < dim; hi += 2 * mask) {
        for (std::uint64_t i = hi; i < hi + mask; ++i) {
            const cplx a0 = amps[i];
            const cplx a1 = amps[i | mask];
            amps[i] = cmul(m0, a0) + cmul(m1, a1);
            amps[i | mask] = cmul(m2, a0) + cmul(m3, a1);
        }
    }
}

inline void apply_h(std::span<cplx> amps, Qubit q) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    const double r = 0.70710678118654752440;
    for (std::uint64_t hi = 0; hi < amps.size(); hi += 2 * mask) {
        for (std::uint64_t i = hi; i < hi + mask; ++i) {
            const cplx a0 = amps[i];
            const cplx a1 = amps[i | mask];
            amps[i] = (a0 + a1) * r;
            amps[i | mask] = (a0 - a1) * r;
        }
    }
}

// Inserts a zero bit at position p.
inline std::uint64_t insert_zero(std::uint64_t x, Qubit p) {
    const std::uint64_t low = (std::uint64_t{1} << p) - 1;
    return (x & low) | ((x & ~low) << 1);
}

inline void apply_diag_1q(std::span<cplx> amps, cplx d0, cplx d1, Qubit q) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    const std::uint64_t half = amps.size() / 2;
    for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t i = insert_zero(k, q);
        amps[i] = cmul(amps[i], d0);
        amps[i | mask] = cmul(amps[i | mask], d1);
    }
}

inline void apply_x(std::span<cplx> amps, Qubit q) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    for (std::uint64_t hi = 0; hi < amps.size(); hi += 2 * mask) {
        for (std::uint64_t i = hi; i < hi + mask; ++i) {
            std::swap(amps[i], amps[i | mask]);
        }
    }
}

inline void apply_cnot(std::span<cplx> amps, Qubit control, Qubit target) {
    const std::uint64_t cm = std::uint64_t{1} << control;
    const std::uint64_t tm = std::uint64_t{1} << target;
    const Qubit lo = std::min(control, target), hi = std::max(control, target);
    const std::uint64_t quarter = amps.size() / 4;
    for (std::uint64_t k = 0; k < quarter; ++k) {
        const std::uint64_t i = insert_zero(insert_zero(k, lo), hi) | cm;
        std::swap(amps[i], amps[i | tm]);
    }
}

inline void apply_cz(std::span<cplx> amps, Qubit a, Qubit b) {
    const std::uint64_t m = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    const Qubit lo = std::min(a, b), hi = std::max(a, b);
    const std::uint64_t quarter = amps.size() / 4;
    for (std::uint64_t k = 0; k < quarter; ++k) {
        const std::uint64_t i = insert_zero(insert_zero(k, lo), hi) | m;
        amps[i] = -amps[i];
    }
}

/// Generic k-qubit matrix; local index bit i corresponds to targets[i].
inline void apply_matrix(std::span<cplx> amps, const DenseMatrix &m, std::span<const Qubit> targets) {
    const std::size_t k = targets.size();
    const std::size_t local = std::size_t{1} << k;
    std::vector<Qubit> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> offsets(local);
    for (std::size_t l = 0; l < local; ++l) {
        std::uint64_t off = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if ((l >> i) & 1) {
                off |= std::uint64_t{1} << targets[i];
            }
        }
        offsets[l] = off;
    }
    std::vector<cplx> in(local), out(local);
    const std::uint64_t blocks = amps.size() >> k;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        std::uint64_t base = deposit_bits(b, sorted);
        for (std::size_t l = 0; l < local; ++l) {
            in[l] = amps[base + offsets[l]];
        }
        for (std::size_t r = 0; r < local; ++r) {
            cplx acc = 0;
            for (std::size_t c = 0; c < local; ++c) {
                acc += cmul(m(r, c), in[c]);
            }
            out[r] = acc;
        }
        for (std::size_t l = 0; l < local; ++l) {
            amps[base + offsets[l]] = out[l];
        }
    }
}

/// Masks describing how a Pauli string acts on basis states:
/// P|i> = coeff * i^ny * (-1)^popcount(i & zmask) |i ^ xmask>.
struct PauliMasks {
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    cplx phase{1.0, 0.0};
};

}  // namespace encclone::detail

#endif
