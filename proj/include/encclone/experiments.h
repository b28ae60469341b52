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

#ifndef ENCCLONE_EXPERIMENTS_H
#define ENCCLONE_EXPERIMENTS_H

#include <array>
#include <functional>
#include <optional>
#include <cstdint>
#include <string>
#include <vector>

#include "encclone/circuit.h"
#include "encclone/config.h"
#include "encclone/estimators.h"
#include "encclone/protocol.h"

namespace encclone {

/// Entanglement fidelity versus n. `exact` is the expectation-value fidelity of
/// the final (Atilde, S_j) state: exact on the statevector and density
/// backends, a trajectory mean otherwise.
struct Exp1Row {
    std::size_t n = 0;
    std::size_t qubits = 0;
    LayerMetrics bsm_metrics;
    FidelityEstimate bsm;
    LayerMetrics pom_metrics;
    FidelityEstimate pom;
    FidelityEstimate exact;
};

/// CHSH between Atilde and S_1 for one measurement-ordering scenario.
struct Exp2Row {
    std::size_t n = 0;
    std::string scenario;
    CHSHEstimate sampled;
    CHSHEstimate exact;
};

struct Exp3Row {
    std::size_t l = 0;
    IterationStrategy strategy = IterationStrategy::Full;
    std::size_t extra_subset = 0;
    std::size_t qubits = 0;
    std::size_t clones = 0;
    std::size_t virtual_clones = 0;
    std::size_t key_size = 0;
    LayerMetrics metrics;
    FidelityEstimate fidelity;
};

struct Exp4Row {
    std::size_t r = 0;
    std::size_t qubits = 0;
    LayerMetrics metrics;
    FidelityEstimate fidelity;                // POM from expectations (exact or trajectory mean)
    std::optional<FidelityEstimate> sampled;  // POM from shots; needs a backend with exact RZ angles
    Classification classification = Classification::AtFloor;
};

/// |T_ij| = |<sigma_i(Atilde) sigma_j(q)>| for i, j in {X, Y, Z}.
struct CorrelationRow {
    std::size_t n = 0;
    std::string stage;  // "prepared", "encrypted", "decrypted"
    std::string qubit;  // role name
    std::array<std::array<double, 3>, 3> t{};
};

/// Single-qubit marginal of an encrypted clone or noise qubit.
struct MixednessRow {
    std::size_t n = 0;
    std::string qubit;
    double purity = 0.0;
    std::array<double, 3> bloch{};
};

std::vector<Exp1Row> run_experiment1(const ExperimentConfig &cfg);
std::vector<Exp2Row> run_experiment2(const ExperimentConfig &cfg);
std::vector<Exp3Row> run_experiment3(const ExperimentConfig &cfg);
std::vector<Exp4Row> run_experiment4(const ExperimentConfig &cfg);
std::vector<CorrelationRow> run_correlation_scan(const ExperimentConfig &cfg);
std::vector<MixednessRow> run_mixedness(const ExperimentConfig &cfg);

/// Experiment 2 circuit: preparation and encryption, then the scenario's
/// ordering of decryption and readout. `rotate` is called on each measured
/// qubit right before its MEASURE so callers can pick the basis.
enum class ChshQubit : std::uint8_t { Reference, Clone };
Circuit build_chsh_circuit(std::size_t n, const std::string &scenario,
                           const std::function<void(Circuit &, Qubit, ChshQubit)> &rotate);

/// Rows as printable cells under a fixed header.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// (series, x, y, sigma) points for plotting.
struct PlotPoint {
    std::string series;
    double x = 0.0;
    double y = 0.0;
    double sigma = 0.0;
};

ResultTable tabulate(const std::vector<Exp1Row> &rows);
ResultTable tabulate(const std::vector<Exp2Row> &rows);
ResultTable tabulate(const std::vector<Exp3Row> &rows);
ResultTable tabulate(const std::vector<Exp4Row> &rows);
ResultTable tabulate(const std::vector<CorrelationRow> &rows);
ResultTable tabulate(const std::vector<MixednessRow> &rows);

/// Fidelity against L_2q (sorted by L_2q) for exp1, S against n for exp2.
std::vector<PlotPoint> plot_points(const std::vector<Exp1Row> &rows);
std::vector<PlotPoint> plot_points(const std::vector<Exp2Row> &rows);

std::string to_csv(const ResultTable &table);
std::string to_plot_data(const std::vector<PlotPoint> &points);
/// Throws IoError when the file cannot be written.
void write_text_file(const std::string &path, const std::string &content);

/// Runs cfg.experiment and returns its CSV and plot data (plot data is empty
/// for experiments without a curve).
struct RunOutput {
    std::string csv;
    std::string plot;
    std::size_t rows = 0;
};
RunOutput run_configured(const ExperimentConfig &cfg);

}  // namespace encclone

#endif
