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

#include <charconv>
#include <cstdio>
#include <sstream>

#include "encclone/circuit.h"
#include "encclone/error.h"

namespace encclone {

std::string serialize(const Circuit &c) {
    std::ostringstream out;
    out << "QUBITS " << c.num_qubits() << "\n";
    if (c.layout()) {
        const auto &roles = c.layout()->roles();
        for (std::size_t q = 0; q < roles.size(); ++q) {
            out << "ROLE " << q << " " << roles[q].str() << "\n";
        }
    }
    for (const auto &op : c.ops()) {
        out << gate_kind_name(op.gate.kind);
        for (Qubit q : op.targets()) {
            out << " " << q;
        }
        if (op.gate.kind == GateKind::RZ || op.gate.kind == GateKind::IDLE) {
            // %.17g round-trips every double exactly.
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", op.gate.param);
            out << " " << buf;
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            words.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return words;
}

[[noreturn]] void fail(std::size_t line_no, const std::string &msg) {
    throw ParseError("circuit line " + std::to_string(line_no) + ": " + msg);
}

std::uint64_t parse_index(std::string_view w, std::size_t line_no) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
        fail(line_no, "expected a qubit index, got '" + std::string(w) + "'");
    }
    return v;
}

double parse_real(std::string_view w, std::size_t line_no) {
    std::string s(w);
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        fail(line_no, "expected a number, got '" + s + "'");
    }
    return v;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::vector<std::pair<Qubit, Role>> roles;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        if (words[0] == "QUBITS") {
            if (circuit) {
                fail(line_no, "QUBITS must appear once, before any gate");
            }
            if (words.size() != 2) {
                fail(line_no, "QUBITS takes one argument");
            }
            circuit.emplace(parse_index(words[1], line_no));
            continue;
        }
        if (!circuit) {
            fail(line_no, "missing QUBITS header");
        }
        if (words[0] == "ROLE") {
            if (words.size() != 3) {
                fail(line_no, "ROLE takes a qubit and a role name");
            }
            try {
                roles.emplace_back(static_cast<Qubit>(parse_index(words[1], line_no)), Role::parse(words[2]));
            } catch (const ParseError &e) {
                fail(line_no, e.what());
            }
            continue;
        }
        auto kind = parse_gate_kind(words[0]);
        if (!kind) {
            fail(line_no, "unknown gate '" + std::string(words[0]) + "'");
        }
        Gate g{*kind, 0.0};
        const std::size_t arity = g.arity();
        const bool has_param = *kind == GateKind::RZ || *kind == GateKind::IDLE;
        if (words.size() != 1 + arity + (has_param ? 1 : 0)) {
            fail(line_no, "gate " + std::string(words[0]) + " expects " + std::to_string(arity) + " qubit(s)" +
                              (has_param ? " and a parameter" : ""));
        }
        std::vector<Qubit> targets;
        for (std::size_t i = 0; i < arity; ++i) {
            targets.push_back(static_cast<Qubit>(parse_index(words[1 + i], line_no)));
        }
        try {
            if (*kind == GateKind::RZ) {
                g = Gate::rz(parse_real(words.back(), line_no));
            } else if (*kind == GateKind::IDLE) {
                g = Gate::idle(parse_real(words.back(), line_no));
            }
            circuit->append(g, targets);
        } catch (const ParseError &) {
            throw;
        } catch (const Error &e) {
            fail(line_no, e.what());
        }
    }
    if (!circuit) {
        throw ParseError("circuit text has no QUBITS header");
    }
    if (!roles.empty()) {
        if (roles.size() != circuit->num_qubits()) {
            throw ParseError("circuit declares " + std::to_string(roles.size()) + " roles for " +
                             std::to_string(circuit->num_qubits()) + " qubits");
        }
        auto layout = std::make_shared<QubitLayout>();
        for (std::size_t q = 0; q < roles.size(); ++q) {
            if (roles[q].first != q) {
                throw ParseError("ROLE lines must list qubits 0.." + std::to_string(roles.size() - 1) + " in order");
            }
            layout->add(roles[q].second);
        }
        circuit->set_layout(std::move(layout));
    }
    return std::move(*circuit);
}

}  // namespace encclone
