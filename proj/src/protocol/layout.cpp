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

#include "encclone/layout.h"

#include <charconv>

#include "encclone/error.h"

namespace encclone {

std::string Role::str() const {
    std::string out;
    switch (kind) {
        case RoleKind::Ancilla:
            out = "Atilde";
            break;
        case RoleKind::Input:
            out = "A";
            break;
        case RoleKind::Signal:
            out = "S" + std::to_string(index);
            break;
        case RoleKind::Noise:
            out = "N" + std::to_string(index);
            break;
    }
    if (level != 0 || group != 0) {
        out += "@" + std::to_string(level) + "." + std::to_string(group);
    }
    return out;
}

namespace {

std::uint32_t parse_u32(std::string_view text, std::string_view whole) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("malformed role '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Role Role::parse(std::string_view text) {
    Role r;
    std::string_view head = text;
    auto at = text.find('@');
    if (at != std::string_view::npos) {
        head = text.substr(0, at);
        std::string_view tail = text.substr(at + 1);
        auto dot = tail.find('.');
        if (dot == std::string_view::npos) {
            throw ParseError("malformed role '" + std::string(text) + "': expected @level.group");
        }
        r.level = parse_u32(tail.substr(0, dot), text);
        r.group = parse_u32(tail.substr(dot + 1), text);
    }
    if (head == "Atilde") {
        r.kind = RoleKind::Ancilla;
    } else if (head == "A") {
        r.kind = RoleKind::Input;
    } else if (!head.empty() && (head[0] == 'S' || head[0] == 'N')) {
        r.kind = head[0] == 'S' ? RoleKind::Signal : RoleKind::Noise;
        r.index = parse_u32(head.substr(1), text);
        if (r.index == 0) {
            throw ParseError("malformed role '" + std::string(text) + "': indices start at 1");
        }
    } else {
        throw ParseError("unknown role '" + std::string(text) + "'");
    }
    return r;
}

Qubit QubitLayout::add(Role role) {
    if (find(role)) {
        throw InvalidArgument("role " + role.str() + " already assigned");
    }
    roles_.push_back(role);
    return static_cast<Qubit>(roles_.size() - 1);
}

const Role &QubitLayout::role(Qubit q) const {
    if (q >= roles_.size()) {
        throw OutOfRange("qubit " + std::to_string(q) + " has no role");
    }
    return roles_[q];
}

std::optional<Qubit> QubitLayout::find(const Role &role) const {
    for (std::size_t q = 0; q < roles_.size(); ++q) {
        if (roles_[q] == role) {
            return static_cast<Qubit>(q);
        }
    }
    return std::nullopt;
}

Qubit QubitLayout::at(const Role &role) const {
    auto q = find(role);
    if (!q) {
        throw InvalidArgument("layout has no qubit with role " + role.str());
    }
    return *q;
}

void QubitLayout::validate() const {
    for (std::size_t i = 0; i < roles_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (roles_[i] == roles_[j]) {
                throw InvalidArgument("role " + roles_[i].str() + " assigned to qubits " + std::to_string(j) +
                                      " and " + std::to_string(i));
            }
        }
    }
}

QubitLayout standard_layout(std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("number of clones n must be >= 1");
    }
    QubitLayout layout;
    layout.add({RoleKind::Ancilla, 0, 0, 0});
    layout.add({RoleKind::Input, 0, 0, 0});
    for (std::uint32_t i = 1; i <= n; ++i) {
        layout.add({RoleKind::Signal, i, 0, 0});
        layout.add({RoleKind::Noise, i, 0, 0});
    }
    return layout;
}

}  // namespace encclone
