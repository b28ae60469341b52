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

#include "encclone/error.h"
#include "encclone/protocol.h"

namespace encclone {

void append_bell_prep(Circuit &c, Qubit a, Qubit b) {
    if (a == b) {
        throw InvalidArgument("Bell preparation needs two distinct qubits, got " + std::to_string(a) + " twice");
    }
    c.h(a);
    c.cx(a, b);
}

Circuit bell_prep(std::size_t num_qubits, Qubit a, Qubit b) {
    Circuit c(num_qubits);
    append_bell_prep(c, a, b);
    return c;
}

void append_ghz_prep(Circuit &c, std::span<const Qubit> qubits) {
    if (qubits.empty()) {
        throw InvalidArgument("GHZ preparation needs at least one qubit");
    }
    c.h(qubits[0]);
    for (std::size_t i = 1; i < qubits.size(); ++i) {
        c.cx(qubits[i - 1], qubits[i]);
    }
}

Circuit ghz_prep(std::size_t num_qubits, std::span<const Qubit> qubits) {
    Circuit c(num_qubits);
    append_ghz_prep(c, qubits);
    return c;
}

namespace {

// CNOTs of one half of the parity ladder, in time order, and the parity qubit.
std::vector<std::pair<Qubit, Qubit>> parity_ladder(Qubit data, std::span<const Qubit> signals, Qubit &parity) {
    const std::size_t n = signals.size();
    // chain[0] = data, chain[i] = S_i.
    std::vector<Qubit> chain{data};
    chain.insert(chain.end(), signals.begin(), signals.end());
    std::vector<std::pair<Qubit, Qubit>> cnots;
    std::size_t even = n;
    if (n % 2 == 1) {
        cnots.emplace_back(chain[n], chain[n - 1]);
        even = n - 1;
    }
    const std::size_t m = even / 2;
    const std::size_t target = m + 1 <= even ? m + 1 : 0;
    // Left arm A -> S_1 -> ... -> S_{m+1} and right arm S_2m -> ... -> S_{m+1},
    // interleaved so that both arms advance together.
    std::vector<std::pair<Qubit, Qubit>> left, right;
    if (even > 0) {
        for (std::size_t i = 0; i < target; ++i) {
            left.emplace_back(chain[i], chain[i + 1]);
        }
        for (std::size_t i = even; i > target; --i) {
            right.emplace_back(chain[i], chain[i - 1]);
        }
    }
    for (std::size_t i = 0; i < std::max(left.size(), right.size()); ++i) {
        if (i < left.size()) {
            cnots.push_back(left[i]);
        }
        if (i < right.size()) {
            cnots.push_back(right[i]);
        }
    }
    parity = chain[target];
    return cnots;
}

void check_distinct(Qubit data, std::span<const Qubit> signals) {
    if (signals.empty()) {
        throw InvalidArgument("encryption needs n >= 1 signal qubits");
    }
    std::vector<Qubit> all{data};
    all.insert(all.end(), signals.begin(), signals.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw InvalidArgument("encryption qubits must be distinct");
    }
}

}  // namespace

void append_zz_phase(Circuit &c, Qubit data, std::span<const Qubit> signals) {
    check_distinct(data, signals);
    Qubit parity = data;
    auto cnots = parity_ladder(data, signals, parity);
    for (const auto &[a, b] : cnots) {
        c.cx(a, b);
    }
    c.rz(parity, kPi / 2);
    for (auto it = cnots.rbegin(); it != cnots.rend(); ++it) {
        c.cx(it->first, it->second);
    }
}

void append_encryption(Circuit &c, Qubit data, std::span<const Qubit> signals) {
    append_zz_phase(c, data, signals);
    c.h(data);
    for (Qubit s : signals) {
        c.h(s);
    }
    append_zz_phase(c, data, signals);
    c.h(data);
    for (Qubit s : signals) {
        c.h(s);
    }
}

void append_v(Circuit &c, Qubit signal, Qubit noise) {
    c.h(noise);
    c.cz(signal, noise);
    c.h(signal);
    c.h(noise);
}

void append_v_dagger(Circuit &c, Qubit signal, Qubit noise) {
    c.h(signal);
    c.h(noise);
    c.cz(signal, noise);
    c.h(noise);
}

void append_decryption(Circuit &c, Qubit signal, Qubit partner, std::span<const Qubit> others, std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("number of clones n must be >= 1");
    }
    if (others.size() + 1 > n) {
        throw InvalidArgument("decryption got " + std::to_string(others.size() + 1) + " key qubits for n = " +
                              std::to_string(n));
    }
    append_v(c, signal, partner);
    // others[k] plays N_{k+2}; N_3..N_n use CZ then CNOT, N_2 the reverse.
    for (std::size_t k = others.size(); k-- > 1;) {
        c.cz(signal, others[k]);
        c.cx(partner, others[k]);
    }
    if (!others.empty()) {
        c.cx(partner, others[0]);
        c.cz(signal, others[0]);
    }
    if (n == 1) {
        c.cz(signal, partner);
    }
    c.s(signal);
    c.s(partner);
    append_v_dagger(c, signal, partner);
}

Circuit build_encryption(std::size_t n, const QubitLayout &layout) {
    if (n == 0) {
        throw InvalidArgument("number of clones n must be >= 1");
    }
    Qubit a = layout.at({RoleKind::Input, 0, 0, 0});
    std::vector<Qubit> signals;
    for (std::uint32_t i = 1; i <= n; ++i) {
        signals.push_back(layout.at({RoleKind::Signal, i, 0, 0}));
    }
    Circuit c(layout.size());
    append_encryption(c, a, signals);
    c.set_layout(std::make_shared<QubitLayout>(layout));
    return c;
}

Circuit build_decryption(std::size_t n, std::size_t j, const QubitLayout &layout) {
    if (n == 0) {
        throw InvalidArgument("number of clones n must be >= 1");
    }
    if (j < 1 || j > n) {
        throw OutOfRange("chosen clone j = " + std::to_string(j) + " outside 1.." + std::to_string(n));
    }
    const auto jj = static_cast<std::uint32_t>(j);
    Qubit s = layout.at({RoleKind::Signal, jj, 0, 0});
    Qubit partner = layout.at({RoleKind::Noise, jj, 0, 0});
    std::vector<Qubit> others;
    for (std::uint32_t i = 1; i <= n; ++i) {
        if (i != jj) {
            others.push_back(layout.at({RoleKind::Noise, i, 0, 0}));
        }
    }
    Circuit c(layout.size());
    append_decryption(c, s, partner, others, n);
    c.set_layout(std::make_shared<QubitLayout>(layout));
    return c;
}

Pipeline build_pipeline(std::size_t n, std::size_t j) {
    auto layout = std::make_shared<QubitLayout>(standard_layout(n));
    Pipeline p;
    p.circuit = Circuit(layout->size());
    p.ancilla = layout->at({RoleKind::Ancilla, 0, 0, 0});
    Qubit a = layout->at({RoleKind::Input, 0, 0, 0});
    append_bell_prep(p.circuit, p.ancilla, a);
    for (std::uint32_t i = 1; i <= n; ++i) {
        append_bell_prep(p.circuit, layout->at({RoleKind::Signal, i, 0, 0}), layout->at({RoleKind::Noise, i, 0, 0}));
    }
    p.circuit.append(build_encryption(n, *layout));
    p.circuit.append(build_decryption(n, j, *layout));
    p.recovered = layout->at({RoleKind::Signal, static_cast<std::uint32_t>(j), 0, 0});
    p.circuit.set_layout(layout);
    p.layout = layout;
    return p;
}

Experiment4Circuit build_experiment4(std::size_t r) {
    if (r == 0) {
        throw InvalidArgument("GHZ size r must be >= 1");
    }
    auto layout = std::make_shared<QubitLayout>();
    std::vector<Qubit> data;
    for (std::uint32_t g = 0; g < r; ++g) {
        data.push_back(layout->add({RoleKind::Input, 0, 0, g}));
        layout->add({RoleKind::Signal, 1, 0, g});
        layout->add({RoleKind::Noise, 1, 0, g});
        layout->add({RoleKind::Signal, 2, 0, g});
        layout->add({RoleKind::Noise, 2, 0, g});
    }
    Experiment4Circuit out;
    out.circuit = Circuit(layout->size());
    append_ghz_prep(out.circuit, data);
    for (Qubit a : data) {
        append_bell_prep(out.circuit, a + 1, a + 2);
        append_bell_prep(out.circuit, a + 3, a + 4);
    }
    for (Qubit a : data) {
        const Qubit signals[2] = {a + 1, a + 3};
        append_encryption(out.circuit, a, signals);
    }
    for (Qubit a : data) {
        const Qubit others[1] = {a + 4};
        append_decryption(out.circuit, a + 1, a + 2, others, 2);
        out.recovered.push_back(a + 1);
    }
    out.circuit.set_layout(layout);
    out.layout = layout;
    out.exceeds_statevector = layout->size() > kDefaultMaxStatevectorQubits;
    return out;
}

}  // namespace encclone
