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

#ifndef ENCCLONE_LAYOUT_H
#define ENCCLONE_LAYOUT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "encclone/types.h"

namespace encclone {

enum class RoleKind : std::uint8_t {
    Ancilla,  // the reference qubit entangled with the input ("A tilde")
    Input,    // data qubit A of an encryption group
    Signal,   // S_i
    Noise,    // N_i
};

/// Role of one physical qubit. `index` is 1-based for signal/noise qubits and 0
/// otherwise; `level` is the iteration depth of the encryption group the qubit
/// belongs to and `group` distinguishes groups within a level (or GHZ members).
struct Role {
    RoleKind kind = RoleKind::Input;
    std::uint32_t index = 0;
    std::uint32_t level = 0;
    std::uint32_t group = 0;

    bool operator==(const Role &other) const = default;

    /// "Atilde", "A", "A@0.2", "S1", "N2@1.4" (the @level.group suffix is
    /// omitted for level 0, group 0).
    std::string str() const;
    static Role parse(std::string_view text);
};

/// Assignment of roles to physical qubit indices.
class QubitLayout {
   public:
    QubitLayout() = default;

    Qubit add(Role role);
    std::size_t size() const {
        return roles_.size();
    }
    const Role &role(Qubit q) const;
    const std::vector<Role> &roles() const {
        return roles_;
    }

    std::optional<Qubit> find(const Role &role) const;
    /// Like find() but throws InvalidArgument naming the missing role.
    Qubit at(const Role &role) const;

    /// Roles must be pairwise distinct.
    void validate() const;

    bool operator==(const QubitLayout &other) const = default;

   private:
    std::vector<Role> roles_;
};

/// The standard single-level layout: Atilde = 0, A = 1, S_i = 2i, N_i = 2i + 1.
QubitLayout standard_layout(std::size_t n);

}  // namespace encclone

#endif
