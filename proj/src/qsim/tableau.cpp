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

#include "encclone/tableau.h"

#include <bit>
#include <algorithm>
#include <cmath>
#include <map>

#include "encclone/error.h"
#include "encclone/types.h"

namespace encclone {

namespace {

// Exponent of i picked up when multiplying row 1 into row 2 (result = P1 * P2),
// summed over one 64-qubit word. Returns (positive count - negative count).
int word_phase(std::uint64_t x1, std::uint64_t z1, std::uint64_t x2, std::uint64_t z2) {
    std::uint64_t y1 = x1 & z1;
    std::uint64_t xo = x1 & ~z1;
    std::uint64_t zo = z1 & ~x1;
    std::uint64_t pos = (y1 & z2 & ~x2) | (xo & z2 & x2) | (zo & x2 & ~z2);
    std::uint64_t neg = (y1 & x2 & ~z2) | (xo & z2 & ~x2) | (zo & x2 & z2);
    return std::popcount(pos) - std::popcount(neg);
}

// dst <- src * dst on raw packed rows; returns the new sign bit.
std::uint8_t multiply_into(std::uint64_t *dx, std::uint64_t *dz, std::uint8_t dsign, const std::uint64_t *sx,
                           const std::uint64_t *sz, std::uint8_t ssign, std::size_t words) {
    int e = 2 * dsign + 2 * ssign;
    for (std::size_t w = 0; w < words; ++w) {
        e += word_phase(sx[w], sz[w], dx[w], dz[w]);
        dx[w] ^= sx[w];
        dz[w] ^= sz[w];
    }
    e = ((e % 4) + 4) % 4;
    // Products of commuting Hermitian Paulis are Hermitian, so e is even.
    return static_cast<std::uint8_t>(e == 2);
}

bool anticommutes(const std::uint64_t *ax, const std::uint64_t *az, const std::uint64_t *bx, const std::uint64_t *bz,
                  std::size_t words) {
    int parity = 0;
    for (std::size_t w = 0; w < words; ++w) {
        parity ^= std::popcount((ax[w] & bz[w]) ^ (az[w] & bx[w])) & 1;
    }
    return parity != 0;
}

}  // namespace

Tableau::Tableau(std::size_t num_qubits) : n_(num_qubits), words_((num_qubits + 63) / 64) {
    if (num_qubits == 0) {
        throw InvalidArgument("tableau needs at least one qubit");
    }
    if (num_qubits > kMaxTableauQubits) {
        throw CapacityError("tableau of " + std::to_string(num_qubits) + " qubits exceeds the limit of " +
                            std::to_string(kMaxTableauQubits));
    }
    const std::size_t rows = 2 * n_ + 1;
    xs_.assign(rows * words_, 0);
    zs_.assign(rows * words_, 0);
    signs_.assign(rows, 0);
    for (std::size_t q = 0; q < n_; ++q) {
        xs_[q * words_ + q / 64] |= std::uint64_t{1} << (q % 64);
        zs_[(q + n_) * words_ + q / 64] |= std::uint64_t{1} << (q % 64);
    }
}

void Tableau::check(Qubit q) const {
    if (q >= n_) {
        throw OutOfRange("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

void Tableau::apply(const Gate &gate, std::span<const Qubit> targets) {
    if (targets.size() != gate.arity()) {
        throw InvalidArgument("gate " + gate.name() + " expects " + std::to_string(gate.arity()) + " target(s)");
    }
    if (targets.size() == 2 && targets[0] == targets[1]) {
        throw InvalidArgument("duplicate target qubit " + std::to_string(targets[0]));
    }
    switch (gate.kind) {
        case GateKind::H:
            h(targets[0]);
            return;
        case GateKind::X:
            x(targets[0]);
            return;
        case GateKind::Z:
            z(targets[0]);
            return;
        case GateKind::S:
            s(targets[0]);
            return;
        case GateKind::Sdg:
            sdg(targets[0]);
            return;
        case GateKind::SX:
            sx(targets[0]);
            return;
        case GateKind::RZ: {
            int k = gate.rz_quarter_turns();
            if (k < 0) {
                throw NonCliffordError("non-Clifford gate " + gate.name() + " cannot run on the stabilizer backend");
            }
            check(targets[0]);
            for (int i = 0; i < k; ++i) {
                s(targets[0]);
            }
            return;
        }
        case GateKind::CNOT:
            cx(targets[0], targets[1]);
            return;
        case GateKind::CZ:
            cz(targets[0], targets[1]);
            return;
        case GateKind::IDLE:
        case GateKind::MEASURE:
            check(targets[0]);
            return;
    }
}

void Tableau::h(Qubit q) {
    check(q);
    const std::size_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        std::uint64_t &xw = xs_[r * words_ + w];
        std::uint64_t &zw = zs_[r * words_ + w];
        bool xb = xw & m, zb = zw & m;
        signs_[r] ^= static_cast<std::uint8_t>(xb && zb);
        if (xb != zb) {
            xw ^= m;
            zw ^= m;
        }
    }
}

void Tableau::s(Qubit q) {
    check(q);
    const std::size_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        std::uint64_t xw = xs_[r * words_ + w];
        std::uint64_t &zw = zs_[r * words_ + w];
        signs_[r] ^= static_cast<std::uint8_t>((xw & zw & m) != 0);
        zw ^= xw & m;
    }
}

void Tableau::sdg(Qubit q) {
    check(q);
    const std::size_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        std::uint64_t xw = xs_[r * words_ + w];
        std::uint64_t &zw = zs_[r * words_ + w];
        signs_[r] ^= static_cast<std::uint8_t>((xw & ~zw & m) != 0);
        zw ^= xw & m;
    }
}

void Tableau::x(Qubit q) {
    check(q);
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        signs_[r] ^= static_cast<std::uint8_t>(zbit(r, q));
    }
}

void Tableau::z(Qubit q) {
    check(q);
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        signs_[r] ^= static_cast<std::uint8_t>(xbit(r, q));
    }
}

void Tableau::y(Qubit q) {
    check(q);
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        signs_[r] ^= static_cast<std::uint8_t>(xbit(r, q) != zbit(r, q));
    }
}

void Tableau::sx(Qubit q) {
    h(q);
    s(q);
    h(q);
}

void Tableau::cx(Qubit control, Qubit target) {
    check(control);
    check(target);
    if (control == target) {
        throw InvalidArgument("CNOT control and target coincide");
    }
    const std::size_t wc = control / 64, wt = target / 64;
    const unsigned bc = control % 64, bt = target % 64;
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        std::uint64_t &xc = xs_[r * words_ + wc];
        std::uint64_t &zc = zs_[r * words_ + wc];
        std::uint64_t &xt = xs_[r * words_ + wt];
        std::uint64_t &zt = zs_[r * words_ + wt];
        bool xa = (xc >> bc) & 1, za = (zc >> bc) & 1;
        bool xb = (xt >> bt) & 1, zb = (zt >> bt) & 1;
        signs_[r] ^= static_cast<std::uint8_t>(xa && zb && (xb == za));
        if (xa) {
            xt ^= std::uint64_t{1} << bt;
        }
        if (zb) {
            zc ^= std::uint64_t{1} << bc;
        }
    }
}

void Tableau::cz(Qubit a, Qubit b) {
    h(b);
    cx(a, b);
    h(b);
}

void Tableau::rowcopy(std::size_t dst, std::size_t src) {
    std::copy_n(xs_.begin() + src * words_, words_, xs_.begin() + dst * words_);
    std::copy_n(zs_.begin() + src * words_, words_, zs_.begin() + dst * words_);
    signs_[dst] = signs_[src];
}

void Tableau::rowclear(std::size_t row) {
    std::fill_n(xs_.begin() + row * words_, words_, 0);
    std::fill_n(zs_.begin() + row * words_, words_, 0);
    signs_[row] = 0;
}

void Tableau::rowsum(std::size_t h, std::size_t i) {
    signs_[h] = multiply_into(&xs_[h * words_], &zs_[h * words_], signs_[h], &xs_[i * words_], &zs_[i * words_],
                              signs_[i], words_);
}

int Tableau::expect_pauli(const PauliString &p) const {
    if (p.size() != n_) {
        throw InvalidArgument("Pauli string length " + std::to_string(p.size()) + " does not match register size " +
                              std::to_string(n_));
    }
    if (std::abs(p.coeff.imag()) > 1e-12 || std::abs(std::abs(p.coeff.real()) - 1.0) > 1e-12) {
        throw InvalidArgument("Pauli expectation needs a Hermitian string with coefficient +1 or -1");
    }
    std::vector<std::uint64_t> px(words_, 0), pz(words_, 0);
    for (std::size_t q = 0; q < n_; ++q) {
        std::uint64_t m = std::uint64_t{1} << (q % 64);
        if (p.ops[q] == Pauli::X || p.ops[q] == Pauli::Y) {
            px[q / 64] |= m;
        }
        if (p.ops[q] == Pauli::Z || p.ops[q] == Pauli::Y) {
            pz[q / 64] |= m;
        }
    }
    for (std::size_t r = n_; r < 2 * n_; ++r) {
        if (anticommutes(px.data(), pz.data(), &xs_[r * words_], &zs_[r * words_], words_)) {
            return 0;
        }
    }
    std::vector<std::uint64_t> ax(words_, 0), az(words_, 0);
    std::uint8_t sign = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (anticommutes(px.data(), pz.data(), &xs_[i * words_], &zs_[i * words_], words_)) {
            std::size_t r = i + n_;
            sign = multiply_into(ax.data(), az.data(), sign, &xs_[r * words_], &zs_[r * words_], signs_[r], words_);
        }
    }
    int value = sign ? -1 : 1;
    return p.coeff.real() < 0 ? -value : value;
}

bool Tableau::measure(Qubit q, Rng &rng) {
    check(q);
    std::size_t p = 2 * n_;
    for (std::size_t r = n_; r < 2 * n_; ++r) {
        if (xbit(r, q)) {
            p = r;
            break;
        }
    }
    if (p < 2 * n_) {
        for (std::size_t r = 0; r < 2 * n_; ++r) {
            if (r != p && xbit(r, q)) {
                rowsum(r, p);
            }
        }
        rowcopy(p - n_, p);
        rowclear(p);
        zs_[p * words_ + q / 64] |= std::uint64_t{1} << (q % 64);
        std::uint8_t bit = static_cast<std::uint8_t>(rng() >> 63);
        signs_[p] = bit;
        return bit != 0;
    }
    const std::size_t scratch = 2 * n_;
    rowclear(scratch);
    for (std::size_t i = 0; i < n_; ++i) {
        if (xbit(i, q)) {
            rowsum(scratch, i + n_);
        }
    }
    return signs_[scratch] != 0;
}

double Tableau::probability(std::span<const Qubit> qubits, std::uint64_t outcome) const {
    return ZOutcomeSpace(*this, qubits).probability(outcome);
}

CountsTable Tableau::sample(std::span<const Qubit> qubits, std::uint64_t shots, std::uint64_t seed) const {
    if (shots == 0) {
        throw InvalidArgument("shots must be >= 1");
    }
    if (qubits.empty()) {
        throw InvalidArgument("sampling needs at least one qubit");
    }
    ZOutcomeSpace space(*this, qubits);
    Rng rng(seed);
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++hist[space.draw(rng)];
    }
    CountsTable table;
    table.num_bits = qubits.size();
    table.seed = seed;
    for (const auto &[outcome, times] : hist) {
        table.add(outcome, times);
    }
    return table;
}

bool Tableau::is_valid() const {
    for (std::size_t i = 0; i < 2 * n_; ++i) {
        for (std::size_t j = i + 1; j < 2 * n_; ++j) {
            bool anti = anticommutes(&xs_[i * words_], &zs_[i * words_], &xs_[j * words_], &zs_[j * words_], words_);
            bool expected = (j == i + n_);
            if (anti != expected) {
                return false;
            }
        }
    }
    return true;
}

namespace {

PauliString row_to_pauli(const std::vector<std::uint64_t> &xs, const std::vector<std::uint64_t> &zs,
                         std::uint8_t sign, std::size_t row, std::size_t n, std::size_t words) {
    PauliString p;
    p.ops.assign(n, Pauli::I);
    for (std::size_t q = 0; q < n; ++q) {
        bool xb = (xs[row * words + q / 64] >> (q % 64)) & 1;
        bool zb = (zs[row * words + q / 64] >> (q % 64)) & 1;
        p.ops[q] = xb ? (zb ? Pauli::Y : Pauli::X) : (zb ? Pauli::Z : Pauli::I);
    }
    p.coeff = sign ? -1.0 : 1.0;
    return p;
}

}  // namespace

PauliString Tableau::stabilizer(std::size_t i) const {
    if (i >= n_) {
        throw OutOfRange("stabilizer index out of range");
    }
    return row_to_pauli(xs_, zs_, signs_[i + n_], i + n_, n_, words_);
}

PauliString Tableau::destabilizer(std::size_t i) const {
    if (i >= n_) {
        throw OutOfRange("destabilizer index out of range");
    }
    return row_to_pauli(xs_, zs_, signs_[i], i, n_, words_);
}

ZOutcomeSpace::ZOutcomeSpace(const Tableau &tableau, std::span<const Qubit> qubits) : k_(qubits.size()) {
    const std::size_t n = tableau.n_;
    const std::size_t words = tableau.words_;
    if (k_ == 0 || k_ > 64) {
        throw InvalidArgument("Z outcome space needs between 1 and 64 measured qubits");
    }
    std::vector<int> slot(n, -1);
    for (std::size_t i = 0; i < k_; ++i) {
        tableau.check(qubits[i]);
        if (slot[qubits[i]] >= 0) {
            throw InvalidArgument("duplicate measured qubit " + std::to_string(qubits[i]));
        }
        slot[qubits[i]] = static_cast<int>(i);
    }
    std::vector<std::uint64_t> xs(tableau.xs_.begin() + n * words, tableau.xs_.begin() + 2 * n * words);
    std::vector<std::uint64_t> zs(tableau.zs_.begin() + n * words, tableau.zs_.begin() + 2 * n * words);
    std::vector<std::uint8_t> signs(tableau.signs_.begin() + n, tableau.signs_.begin() + 2 * n);
    auto bit = [&](const std::vector<std::uint64_t> &v, std::size_t row, std::size_t q) {
        return ((v[row * words + q / 64] >> (q % 64)) & 1) != 0;
    };
    auto mul = [&](std::size_t dst, std::size_t src) {
        signs[dst] = multiply_into(&xs[dst * words], &zs[dst * words], signs[dst], &xs[src * words], &zs[src * words],
                                   signs[src], words);
    };
    // Eliminate every X column and the Z columns of unmeasured qubits; rows left
    // without pivots there are Z-type on the measured subset only.
    std::size_t next = 0;
    auto eliminate = [&](const std::vector<std::uint64_t> &plane, std::size_t q) {
        std::size_t pivot = n;
        for (std::size_t r = next; r < n; ++r) {
            if (bit(plane, r, q)) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) {
            return;
        }
        if (pivot != next) {
            for (std::size_t w = 0; w < words; ++w) {
                std::swap(xs[pivot * words + w], xs[next * words + w]);
                std::swap(zs[pivot * words + w], zs[next * words + w]);
            }
            std::swap(signs[pivot], signs[next]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != next && bit(plane, r, q)) {
                mul(r, next);
            }
        }
        ++next;
    };
    for (std::size_t q = 0; q < n; ++q) {
        eliminate(xs, q);
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (slot[q] < 0) {
            eliminate(zs, q);
        }
    }
    std::vector<std::uint64_t> rows;
    std::vector<std::uint8_t> rhs;
    for (std::size_t r = next; r < n; ++r) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < k_; ++i) {
            if (bit(zs, r, qubits[i])) {
                mask |= std::uint64_t{1} << i;
            }
        }
        if (mask != 0) {
            rows.push_back(mask);
            rhs.push_back(signs[r]);
        }
    }
    // Reduced row echelon form over the k outcome bits.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < k_ && rank < rows.size(); ++c) {
        const std::uint64_t m = std::uint64_t{1} << c;
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r] & m) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        std::swap(rhs[pivot], rhs[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r] & m)) {
                rows[r] ^= rows[rank];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_cols_.push_back(c);
        ++rank;
    }
    masks_.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(rank));
    rhs_.assign(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(rank));
    for (std::size_t c = 0; c < k_; ++c) {
        if (std::find(pivot_cols_.begin(), pivot_cols_.end(), c) == pivot_cols_.end()) {
            free_cols_.push_back(c);
        }
    }
}

bool ZOutcomeSpace::contains(std::uint64_t outcome) const {
    if (k_ < 64 && (outcome >> k_) != 0) {
        return false;
    }
    for (std::size_t r = 0; r < masks_.size(); ++r) {
        if ((std::popcount(masks_[r] & outcome) & 1) != rhs_[r]) {
            return false;
        }
    }
    return true;
}

double ZOutcomeSpace::probability(std::uint64_t outcome) const {
    return contains(outcome) ? std::ldexp(1.0, -static_cast<int>(free_cols_.size())) : 0.0;
}

std::uint64_t ZOutcomeSpace::draw(Rng &rng) const {
    std::uint64_t random = rng();
    std::uint64_t outcome = 0;
    for (std::size_t i = 0; i < free_cols_.size(); ++i) {
        outcome |= ((random >> i) & 1) << free_cols_[i];
    }
    for (std::size_t r = 0; r < masks_.size(); ++r) {
        std::uint64_t others = masks_[r] & ~(std::uint64_t{1} << pivot_cols_[r]);
        std::uint64_t v = rhs_[r] ^ static_cast<std::uint64_t>(std::popcount(others & outcome) & 1);
        outcome |= v << pivot_cols_[r];
    }
    return outcome;
}

}  // namespace encclone
