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

#ifndef ENCCLONE_CONFIG_H
#define ENCCLONE_CONFIG_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "encclone/noise.h"
#include "encclone/protocol.h"

namespace encclone {

enum class Backend : std::uint8_t { Statevector, Density, Trajectory };
std::string_view backend_name(Backend b);
/// "statevector", "density", "tableau-trajectory" (also "tableau", "trajectory").
Backend parse_backend(std::string_view text);

/// Everything a harness run needs. Loaded from `key = value` text; every key is
/// optional. Ranges are written "2..8", lists "2,4,6", or a single value.
struct ExperimentConfig {
    std::string experiment = "exp1";
    std::vector<std::size_t> n_values{2, 3, 4, 5, 6, 7, 8};
    std::vector<std::size_t> l_values{0, 1, 2};
    std::vector<std::size_t> r_values{1, 2, 3, 4, 5};
    std::vector<std::string> scenarios{"2-1", "2-2", "2-3"};
    std::size_t chosen_clone = 1;
    /// Clone parameter of the iterated runs.
    std::size_t iteration_n = 2;
    IterationStrategy strategy = IterationStrategy::Full;
    std::size_t extra_subset = 0;
    bool decrypt_before_extra = false;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 1;
    Backend backend = Backend::Statevector;
    bool noise = false;
    NoiseParams noise_params;
    /// Relative spread of p2q drawn per sweep point; 0 disables.
    double jitter = 0.0;
    std::size_t max_statevector_qubits = kDefaultMaxStatevectorQubits;
    std::string out;
    std::string plot_out;

    /// Noise actually applied: the configured parameters, or none when noise is off.
    NoiseParams effective_noise() const;
    /// Throws InvalidArgument on empty sweeps, zero shots, unknown experiment or
    /// scenario, or inconsistent noise settings.
    void validate() const;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string &path);

/// Experiment names accepted by the harness.
const std::vector<std::string> &experiment_names();

}  // namespace encclone

#endif
