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

namespace {

struct Group {
    std::uint32_t level;
    std::uint32_t index;
    Qubit data;
    std::vector<Qubit> signals;
    std::vector<Qubit> noise;
};

Group allocate_group(QubitLayout &layout, std::uint32_t level, std::uint32_t index, Qubit data, std::size_t n) {
    Group g{level, index, data, {}, {}};
    for (std::uint32_t i = 1; i <= n; ++i) {
        g.signals.push_back(layout.add({RoleKind::Signal, i, level, index}));
        g.noise.push_back(layout.add({RoleKind::Noise, i, level, index}));
    }
    return g;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

}  // namespace

std::size_t iterated_clone_count(std::size_t n, std::size_t l) {
    return ipow(n + 1, l + 1);
}

std::size_t iterated_key_size(std::size_t n, std::size_t l) {
    return n * (l + 1);
}

IterationPlan plan_iterated(const IterationRequest &req) {
    if (req.n == 0 || req.n % 2 != 0) {
        throw InvalidArgument("iterated cloning needs an even n >= 2, got n = " + std::to_string(req.n));
    }
    if (req.strategy == IterationStrategy::SingleBranch && req.extra_subset > 0) {
        throw InvalidArgument("an extra re-cloned subset needs the full strategy");
    }
    const std::size_t n = req.n;
    auto layout = std::make_shared<QubitLayout>();
    const Qubit ancilla = layout->add({RoleKind::Ancilla, 0, 0, 0});
    const Qubit input = layout->add({RoleKind::Input, 0, 0, 0});

    // Clones of the current generation; the clone on the decryption path is
    // kept at the front.
    std::vector<Qubit> clones{input};
    std::vector<Group> groups;
    std::vector<std::size_t> path;  // indices into groups, outermost first
    auto grow = [&](std::uint32_t level, std::span<const Qubit> holders, bool path_first) {
        std::vector<Qubit> next;
        std::vector<Qubit> rest;
        for (std::size_t g = 0; g < holders.size(); ++g) {
            groups.push_back(allocate_group(*layout, level, static_cast<std::uint32_t>(g), holders[g], n));
            const Group &grp = groups.back();
            if (g == 0 && path_first) {
                path.push_back(groups.size() - 1);
                next.push_back(grp.signals[0]);
                rest.push_back(grp.data);
                rest.insert(rest.end(), grp.signals.begin() + 1, grp.signals.end());
            } else {
                rest.push_back(grp.data);
                rest.insert(rest.end(), grp.signals.begin(), grp.signals.end());
            }
        }
        next.insert(next.end(), rest.begin(), rest.end());
        return next;
    };

    for (std::uint32_t level = 0; level <= req.l; ++level) {
        if (req.strategy == IterationStrategy::SingleBranch) {
            Qubit holder = clones.front();
            clones = grow(level, std::span<const Qubit>(&holder, 1), true);
        } else {
            clones = grow(level, clones, true);
        }
    }
    const std::size_t base_groups = groups.size();
    std::size_t clone_count = 1 + n * base_groups;

    std::vector<Qubit> extra_holders;
    if (req.extra_subset > 0) {
        std::vector<Qubit> order = clones;
        if (req.decrypt_before_extra) {
            // The path clone moves to the back so the subset leaves it alone.
            std::rotate(order.begin(), order.begin() + 1, order.end());
            if (req.extra_subset >= order.size()) {
                throw InvalidArgument("extra subset of " + std::to_string(req.extra_subset) +
                                      " must leave the decrypted clone out (at most " +
                                      std::to_string(order.size() - 1) + ")");
            }
        } else if (req.extra_subset > order.size()) {
            throw InvalidArgument("extra subset of " + std::to_string(req.extra_subset) + " exceeds the " +
                                  std::to_string(order.size()) + " clones of the last generation");
        }
        extra_holders.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(req.extra_subset));
        grow(static_cast<std::uint32_t>(req.l + 1), extra_holders, !req.decrypt_before_extra);
        clone_count += n * req.extra_subset;
    }

    IterationPlan plan;
    plan.n = n;
    plan.l = req.l;
    plan.strategy = req.strategy;
    plan.extra_subset = req.extra_subset;
    plan.total_qubits = layout->size();
    plan.clone_count = clone_count;
    plan.virtual_clone_count =
        req.strategy == IterationStrategy::SingleBranch ? iterated_clone_count(n, req.l) : clone_count;
    plan.decrypted_generation = path.size() - 1;
    plan.exceeds_statevector = plan.total_qubits > kDefaultMaxStatevectorQubits;
    plan.ancilla = ancilla;
    plan.recovered = groups[path.back()].signals[0];

    Circuit c(layout->size());
    append_bell_prep(c, ancilla, input);
    for (const auto &g : groups) {
        for (std::size_t i = 0; i < n; ++i) {
            append_bell_prep(c, g.signals[i], g.noise[i]);
        }
    }
    auto encrypt = [&](std::size_t first, std::size_t last) {
        for (std::size_t g = first; g < last; ++g) {
            append_encryption(c, groups[g].data, groups[g].signals);
        }
    };
    auto decrypt = [&]() {
        // Deepest generation first; every step acts on the same physical clone.
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            const Group &g = groups[*it];
            std::vector<Qubit> others(g.noise.begin() + 1, g.noise.end());
            append_decryption(c, plan.recovered, g.noise[0], others, n);
            plan.decryption_key.insert(plan.decryption_key.end(), g.noise.begin(), g.noise.end());
        }
    };
    encrypt(0, base_groups);
    if (req.decrypt_before_extra) {
        decrypt();
        encrypt(base_groups, groups.size());
    } else {
        encrypt(base_groups, groups.size());
        decrypt();
    }
    plan.key_size = plan.decryption_key.size();
    c.set_layout(layout);
    plan.circuit = std::move(c);
    plan.layout = layout;
    return plan;
}

}  // namespace encclone
