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

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "encclone/error.h"
#include "encclone/noise.h"
#include "encclone/rng.h"

namespace encclone {

namespace {

// Index of the next trajectory hit by an event of probability p, starting at
// `from`; geometric skipping keeps sparse noise cheap.
std::size_t next_hit(Rng &rng, double p, std::size_t from, std::size_t limit) {
    if (p >= 1.0) {
        return from;
    }
    double u = uniform01(rng);
    double skip = std::floor(std::log1p(-u) / std::log1p(-p));
    if (!(skip < static_cast<double>(limit - from))) {
        return limit;
    }
    return from + static_cast<std::size_t>(skip);
}

}  // namespace

TrajectoryEnsemble::TrajectoryEnsemble(const Circuit &c, const NoiseParams &params, std::uint64_t seed)
    : num_qubits_(c.num_qubits()),
      count_(params.trajectories),
      words_((params.trajectories + 63) / 64),
      reference_(c.num_qubits()) {
    params.validate();
    if (auto bad = c.first_non_clifford()) {
        throw NonCliffordError("non-Clifford gate " + c.ops()[*bad].gate.name() + " at operation " +
                               std::to_string(*bad) + " cannot run on the trajectory backend");
    }
    fx_.assign(num_qubits_ * words_, 0);
    fz_.assign(num_qubits_ * words_, 0);
    Rng rng(derive_seed(seed, 0x7261));
    const auto events = noisy_program(c, params);
    auto row = [&](std::vector<std::uint64_t> &v, Qubit q) { return v.data() + q * words_; };
    auto flip = [&](std::size_t traj, Qubit q, Pauli p) {
        const std::uint64_t m = std::uint64_t{1} << (traj % 64);
        if (p == Pauli::X || p == Pauli::Y) {
            row(fx_, q)[traj / 64] ^= m;
        }
        if (p == Pauli::Z || p == Pauli::Y) {
            row(fz_, q)[traj / 64] ^= m;
        }
    };
    for (const auto &ev : events) {
        switch (ev.kind) {
            case NoiseEvent::Kind::Gate: {
                const Operation &op = c.ops()[ev.op];
                reference_.apply(op.gate, op.targets());
                const Qubit a = op.qubits[0];
                const Qubit b = op.qubits[1];
                std::uint64_t *xa = row(fx_, a), *za = row(fz_, a);
                switch (op.gate.kind) {
                    case GateKind::H:
                        for (std::size_t w = 0; w < words_; ++w) {
                            std::swap(xa[w], za[w]);
                        }
                        break;
                    case GateKind::S:
                    case GateKind::Sdg:
                        for (std::size_t w = 0; w < words_; ++w) {
                            za[w] ^= xa[w];
                        }
                        break;
                    case GateKind::RZ:
                        if (op.gate.rz_quarter_turns() % 2 == 1) {
                            for (std::size_t w = 0; w < words_; ++w) {
                                za[w] ^= xa[w];
                            }
                        }
                        break;
                    case GateKind::SX:
                        for (std::size_t w = 0; w < words_; ++w) {
                            xa[w] ^= za[w];
                        }
                        break;
                    case GateKind::CNOT: {
                        std::uint64_t *xb = row(fx_, b), *zb = row(fz_, b);
                        for (std::size_t w = 0; w < words_; ++w) {
                            xb[w] ^= xa[w];
                            za[w] ^= zb[w];
                        }
                        break;
                    }
                    case GateKind::CZ: {
                        std::uint64_t *xb = row(fx_, b), *zb = row(fz_, b);
                        for (std::size_t w = 0; w < words_; ++w) {
                            za[w] ^= xb[w];
                            zb[w] ^= xa[w];
                        }
                        break;
                    }
                    default:
                        break;
                }
                break;
            }
            case NoiseEvent::Kind::Depolarize: {
                const std::size_t paulis = std::size_t{1} << (2 * ev.arity);
                for (std::size_t t = next_hit(rng, ev.value, 0, count_); t < count_;
                     t = next_hit(rng, ev.value, t + 1, count_)) {
                    std::size_t idx = uniform_below(rng, paulis);
                    for (std::size_t k = 0; k < ev.arity; ++k) {
                        flip(t, ev.qubits[k], static_cast<Pauli>((idx >> (2 * k)) & 3));
                    }
                }
                break;
            }
            case NoiseEvent::Kind::Idle: {
                const PauliRates r = twirled_idle(params.t1, params.t2, ev.value);
                const double total = r.px + r.py + r.pz;
                if (total <= 0.0) {
                    break;
                }
                for (std::size_t t = next_hit(rng, total, 0, count_); t < count_;
                     t = next_hit(rng, total, t + 1, count_)) {
                    double u = uniform01(rng) * total;
                    Pauli p = u < r.px ? Pauli::X : (u < r.px + r.py ? Pauli::Y : Pauli::Z);
                    flip(t, ev.qubits[0], p);
                }
                break;
            }
        }
    }
}

bool TrajectoryEnsemble::frame_x(std::size_t traj, Qubit q) const {
    return (fx_[q * words_ + traj / 64] >> (traj % 64)) & 1;
}

std::uint64_t TrajectoryEnsemble::frame_bits(std::size_t traj, std::span<const Qubit> qubits) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (frame_x(traj, qubits[i])) {
            out |= std::uint64_t{1} << i;
        }
    }
    return out;
}

TrajectoryValue TrajectoryEnsemble::probability(std::span<const Qubit> qubits, std::uint64_t outcome) const {
    ZOutcomeSpace space(reference_, qubits);
    double sum = 0;
    double sum_sq = 0;
    for (std::size_t t = 0; t < count_; ++t) {
        const double p = space.probability(outcome ^ frame_bits(t, qubits));
        sum += p;
        sum_sq += p * p;
    }
    const double n = static_cast<double>(count_);
    TrajectoryValue out;
    out.mean = sum / n;
    if (count_ > 1) {
        const double var = std::max(0.0, (sum_sq - n * out.mean * out.mean) / (n - 1.0));
        out.sigma = std::sqrt(var / n);
    }
    return out;
}

std::vector<int> TrajectoryEnsemble::pauli_values(const PauliString &p) const {
    const int ref = reference_.expect_pauli(p);
    std::vector<int> out(count_, ref);
    if (ref == 0) {
        return out;
    }
    std::vector<std::uint64_t> flips(words_, 0);
    for (Qubit q = 0; q < num_qubits_; ++q) {
        const Pauli op = p.ops[q];
        if (op == Pauli::X || op == Pauli::Y) {
            for (std::size_t w = 0; w < words_; ++w) {
                flips[w] ^= fz_[q * words_ + w];
            }
        }
        if (op == Pauli::Z || op == Pauli::Y) {
            for (std::size_t w = 0; w < words_; ++w) {
                flips[w] ^= fx_[q * words_ + w];
            }
        }
    }
    for (std::size_t t = 0; t < count_; ++t) {
        if ((flips[t / 64] >> (t % 64)) & 1) {
            out[t] = -ref;
        }
    }
    return out;
}

namespace {

// Word range [begin, end) of batch b out of `batches` over `words` words.
std::pair<std::size_t, std::size_t> batch_words(std::size_t b, std::size_t batches, std::size_t words) {
    return {b * words / batches, (b + 1) * words / batches};
}

}  // namespace

std::vector<std::pair<double, std::size_t>> TrajectoryEnsemble::pauli_batches(const PauliString &p,
                                                                              std::size_t batches) const {
    if (p.size() != num_qubits_) {
        throw InvalidArgument("Pauli string length does not match register size");
    }
    batches = std::clamp<std::size_t>(batches, 1, words_);
    const int ref = reference_.expect_pauli(p);
    std::vector<std::uint64_t> flips(words_, 0);
    if (ref != 0) {
        for (Qubit q = 0; q < num_qubits_; ++q) {
            const Pauli op = p.ops[q];
            if (op == Pauli::I) {
                continue;
            }
            const std::uint64_t *x = &fx_[q * words_];
            const std::uint64_t *z = &fz_[q * words_];
            const bool want_z = op == Pauli::X || op == Pauli::Y;
            const bool want_x = op == Pauli::Z || op == Pauli::Y;
            for (std::size_t w = 0; w < words_; ++w) {
                flips[w] ^= (want_z ? z[w] : 0) ^ (want_x ? x[w] : 0);
            }
        }
    }
    std::vector<std::pair<double, std::size_t>> out;
    for (std::size_t b = 0; b < batches; ++b) {
        auto [w0, w1] = batch_words(b, batches, words_);
        const std::size_t first = w0 * 64;
        const std::size_t last = std::min(count_, w1 * 64);
        std::size_t flipped = 0;
        for (std::size_t w = w0; w < w1; ++w) {
            flipped += static_cast<std::size_t>(std::popcount(flips[w]));
        }
        const std::size_t size = last - first;
        const double mean = ref * (1.0 - 2.0 * static_cast<double>(flipped) / static_cast<double>(size));
        out.emplace_back(mean, size);
    }
    return out;
}

std::vector<std::pair<double, std::size_t>> TrajectoryEnsemble::probability_batches(std::span<const Qubit> qubits,
                                                                                    std::uint64_t outcome,
                                                                                    std::size_t batches) const {
    batches = std::clamp<std::size_t>(batches, 1, words_);
    ZOutcomeSpace space(reference_, qubits);
    std::vector<std::pair<double, std::size_t>> out;
    for (std::size_t b = 0; b < batches; ++b) {
        auto [w0, w1] = batch_words(b, batches, words_);
        const std::size_t first = w0 * 64;
        const std::size_t last = std::min(count_, w1 * 64);
        double sum = 0;
        for (std::size_t t = first; t < last; ++t) {
            sum += space.probability(outcome ^ frame_bits(t, qubits));
        }
        out.emplace_back(sum / static_cast<double>(last - first), last - first);
    }
    return out;
}

TrajectoryValue TrajectoryEnsemble::expect_pauli(const PauliString &p) const {
    const auto values = pauli_values(p);
    double sum = 0;
    for (int v : values) {
        sum += v;
    }
    const double n = static_cast<double>(count_);
    TrajectoryValue out;
    out.mean = sum / n;
    if (count_ > 1) {
        // Values are +-c, so the sample variance follows from the mean alone.
        const double c2 = values.empty() ? 0.0 : static_cast<double>(values[0] * values[0]);
        const double var = std::max(0.0, (c2 - out.mean * out.mean) * n / (n - 1.0));
        out.sigma = std::sqrt(var / n);
    }
    return out;
}

CountsTable TrajectoryEnsemble::sample(std::span<const Qubit> qubits, std::uint64_t shots, std::uint64_t seed) const {
    if (shots == 0) {
        throw InvalidArgument("shots must be >= 1");
    }
    if (qubits.empty()) {
        throw InvalidArgument("sampling needs at least one qubit");
    }
    ZOutcomeSpace space(reference_, qubits);
    Rng rng(seed);
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const std::size_t t = static_cast<std::size_t>(s % count_);
        ++hist[space.draw(rng) ^ frame_bits(t, qubits)];
    }
    CountsTable table;
    table.num_bits = qubits.size();
    table.seed = seed;
    for (const auto &[outcome, times] : hist) {
        table.add(outcome, times);
    }
    return table;
}

}  // namespace encclone
