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

#include "encclone/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "encclone/error.h"

namespace encclone {

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Statevector:
            return "statevector";
        case Backend::Density:
            return "density";
        case Backend::Trajectory:
            return "tableau-trajectory";
    }
    return "?";
}

Backend parse_backend(std::string_view text) {
    if (text == "statevector") {
        return Backend::Statevector;
    }
    if (text == "density") {
        return Backend::Density;
    }
    if (text == "tableau-trajectory" || text == "tableau" || text == "trajectory") {
        return Backend::Trajectory;
    }
    throw InvalidArgument("unknown backend '" + std::string(text) +
                          "' (expected statevector, density or tableau-trajectory)");
}

const std::vector<std::string> &experiment_names() {
    static const std::vector<std::string> names{"exp1", "exp2", "exp3", "exp4", "corr-scan", "mixedness"};
    return names;
}

NoiseParams ExperimentConfig::effective_noise() const {
    if (!noise) {
        NoiseParams p = NoiseParams::noiseless();
        p.durations = noise_params.durations;
        p.trajectories = 1;
        return p;
    }
    return noise_params;
}

void ExperimentConfig::validate() const {
    const auto &names = experiment_names();
    if (std::find(names.begin(), names.end(), experiment) == names.end()) {
        throw InvalidArgument("unknown experiment '" + experiment + "'");
    }
    if (shots == 0) {
        throw InvalidArgument("shots must be >= 1");
    }
    if (n_values.empty() || l_values.empty() || r_values.empty() || scenarios.empty()) {
        throw InvalidArgument("sweep ranges must be non-empty");
    }
    for (const auto &s : scenarios) {
        if (s != "2-1" && s != "2-2" && s != "2-3" && s != "undecrypted") {
            throw InvalidArgument("unknown scenario '" + s + "' (expected 2-1, 2-2, 2-3 or undecrypted)");
        }
    }
    if (noise && backend == Backend::Statevector) {
        throw InvalidArgument("the statevector backend is noiseless; use density or tableau-trajectory with noise");
    }
    if (!(jitter >= 0.0 && jitter < 1.0)) {
        throw InvalidArgument("jitter must lie in [0, 1)");
    }
    noise_params.validate();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::uint64_t to_uint(std::string_view v, std::string_view key) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
        throw ParseError("config key '" + std::string(key) + "': expected a non-negative integer, got '" +
                         std::string(v) + "'");
    }
    return out;
}

double to_double(std::string_view v, std::string_view key) {
    std::string s(v);
    if (s == "inf" || s == "infinity") {
        return std::numeric_limits<double>::infinity();
    }
    char *end = nullptr;
    double out = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw ParseError("config key '" + std::string(key) + "': expected a number, got '" + s + "'");
    }
    return out;
}

bool to_bool(std::string_view v, std::string_view key) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no" || v == "off") {
        return false;
    }
    throw ParseError("config key '" + std::string(key) + "': expected true or false, got '" + std::string(v) + "'");
}

std::vector<std::string_view> split(std::string_view v, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = v.find(sep, pos);
        out.push_back(trim(v.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
        if (next == std::string_view::npos) {
            return out;
        }
        pos = next + 1;
    }
}

std::vector<std::size_t> to_range(std::string_view v, std::string_view key) {
    std::vector<std::size_t> out;
    for (auto part : split(v, ',')) {
        auto dots = part.find("..");
        if (dots != std::string_view::npos) {
            std::uint64_t lo = to_uint(trim(part.substr(0, dots)), key);
            std::uint64_t hi = to_uint(trim(part.substr(dots + 2)), key);
            if (hi < lo) {
                throw ParseError("config key '" + std::string(key) + "': empty range " + std::string(part));
            }
            if (hi - lo > 100000) {
                throw ParseError("config key '" + std::string(key) + "': range too large");
            }
            for (std::uint64_t x = lo; x <= hi; ++x) {
                out.push_back(x);
            }
        } else {
            out.push_back(to_uint(part, key));
        }
    }
    return out;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg;
    std::size_t pos = 0;
    std::size_t line_no = 0;
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
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string_view key = trim(line.substr(0, eq));
        std::string_view val = trim(line.substr(eq + 1));
        try {
            if (key == "experiment") {
                cfg.experiment = std::string(val);
            } else if (key == "n") {
                cfg.n_values = to_range(val, key);
            } else if (key == "l") {
                cfg.l_values = to_range(val, key);
            } else if (key == "r") {
                cfg.r_values = to_range(val, key);
            } else if (key == "scenarios") {
                cfg.scenarios.clear();
                for (auto s : split(val, ',')) {
                    cfg.scenarios.emplace_back(s);
                }
            } else if (key == "j") {
                cfg.chosen_clone = to_uint(val, key);
            } else if (key == "iter_n") {
                cfg.iteration_n = to_uint(val, key);
            } else if (key == "strategy") {
                if (val == "full") {
                    cfg.strategy = IterationStrategy::Full;
                } else if (val == "single-branch") {
                    cfg.strategy = IterationStrategy::SingleBranch;
                } else {
                    throw ParseError("config key 'strategy': expected full or single-branch");
                }
            } else if (key == "extra_subset") {
                cfg.extra_subset = to_uint(val, key);
            } else if (key == "decrypt_before_extra") {
                cfg.decrypt_before_extra = to_bool(val, key);
            } else if (key == "shots") {
                cfg.shots = to_uint(val, key);
            } else if (key == "seed") {
                cfg.seed = to_uint(val, key);
            } else if (key == "backend") {
                cfg.backend = parse_backend(val);
            } else if (key == "noise") {
                cfg.noise = to_bool(val, key);
            } else if (key == "p2q") {
                cfg.noise_params.p2q = to_double(val, key);
            } else if (key == "p1q") {
                cfg.noise_params.p1q = to_double(val, key);
            } else if (key == "t1") {
                cfg.noise_params.t1 = to_double(val, key);
            } else if (key == "t2") {
                cfg.noise_params.t2 = to_double(val, key);
            } else if (key == "trajectories") {
                cfg.noise_params.trajectories = to_uint(val, key);
            } else if (key == "twirl_idle") {
                cfg.noise_params.twirl_idle = to_bool(val, key);
            } else if (key == "duration_1q") {
                double d = to_double(val, key);
                for (GateKind k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::SX,
                                   GateKind::RZ}) {
                    cfg.noise_params.durations.table[k] = d;
                }
            } else if (key == "duration_2q") {
                double d = to_double(val, key);
                cfg.noise_params.durations.table[GateKind::CNOT] = d;
                cfg.noise_params.durations.table[GateKind::CZ] = d;
            } else if (key == "duration_measure") {
                cfg.noise_params.durations.table[GateKind::MEASURE] = to_double(val, key);
            } else if (key == "jitter") {
                cfg.jitter = to_double(val, key);
            } else if (key == "max_qubits") {
                cfg.max_statevector_qubits = to_uint(val, key);
            } else if (key == "out") {
                cfg.out = std::string(val);
            } else if (key == "plot_out") {
                cfg.plot_out = std::string(val);
            } else {
                throw ParseError("unknown config key '" + std::string(key) + "'");
            }
        } catch (const ParseError &e) {
            throw ParseError("config line " + std::to_string(line_no) + ": " + e.what());
        } catch (const InvalidArgument &e) {
            throw ParseError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    for (const auto &[kind, d] : cfg.noise_params.durations.table) {
        if (!(d >= 0.0) || !std::isfinite(d)) {
            throw ParseError("gate durations must be finite and non-negative");
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace encclone
