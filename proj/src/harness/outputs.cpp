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
#include <cstdio>
#include <fstream>
#include <sstream>

#include "encclone/error.h"
#include "encclone/experiments.h"

namespace encclone {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    // Avoid "-0.000000" for values that round to zero.
    if (std::string_view(buf) == "-0.000000") {
        return "0.000000";
    }
    return buf;
}

std::string fmt_duration(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string strategy_name(IterationStrategy s) {
    return s == IterationStrategy::Full ? "full" : "single-branch";
}

}  // namespace

ResultTable tabulate(const std::vector<Exp1Row> &rows) {
    ResultTable t{{"n", "N_qubits", "L2q_bsm", "Fe_bsm", "sigma_bsm", "L2q_pom", "Fe_pom", "sigma_pom"}, {}};
    for (const auto &r : rows) {
        t.rows.push_back({std::to_string(r.n), std::to_string(r.qubits), std::to_string(r.bsm_metrics.two_qubit_layers),
                          fmt(r.bsm.value), fmt(r.bsm.sigma), std::to_string(r.pom_metrics.two_qubit_layers),
                          fmt(r.pom.value), fmt(r.pom.sigma)});
    }
    return t;
}

ResultTable tabulate(const std::vector<Exp2Row> &rows) {
    ResultTable t{{"n", "scenario", "S", "sigma", "S_exact", "sigma_exact"}, {}};
    for (const auto &r : rows) {
        t.rows.push_back({std::to_string(r.n), r.scenario, fmt(r.sampled.s), fmt(r.sampled.sigma), fmt(r.exact.s),
                          fmt(r.exact.sigma)});
    }
    return t;
}

ResultTable tabulate(const std::vector<Exp3Row> &rows) {
    ResultTable t{{"l", "strategy", "extra_subset", "N_qubits", "clones", "virtual_clones", "key_size", "L2q", "N2q",
                   "duration_us", "Fe", "sigma"},
                  {}};
    for (const auto &r : rows) {
        t.rows.push_back({std::to_string(r.l), strategy_name(r.strategy), std::to_string(r.extra_subset),
                          std::to_string(r.qubits), std::to_string(r.clones), std::to_string(r.virtual_clones),
                          std::to_string(r.key_size), std::to_string(r.metrics.two_qubit_layers),
                          std::to_string(r.metrics.two_qubit_gates), fmt_duration(r.metrics.total_duration),
                          fmt(r.fidelity.value), fmt(r.fidelity.sigma)});
    }
    return t;
}

ResultTable tabulate(const std::vector<Exp4Row> &rows) {
    ResultTable t{{"r", "N_qubits", "L2q", "N2q", "F_r", "sigma", "F_r_sampled", "sigma_sampled", "classification"},
                  {}};
    for (const auto &r : rows) {
        t.rows.push_back({std::to_string(r.r), std::to_string(r.qubits), std::to_string(r.metrics.two_qubit_layers),
                          std::to_string(r.metrics.two_qubit_gates), fmt(r.fidelity.value), fmt(r.fidelity.sigma),
                          r.sampled ? fmt(r.sampled->value) : "", r.sampled ? fmt(r.sampled->sigma) : "",
                          std::string(classification_name(r.classification))});
    }
    return t;
}

ResultTable tabulate(const std::vector<CorrelationRow> &rows) {
    ResultTable t{{"n", "stage", "qubit", "Txx", "Txy", "Txz", "Tyx", "Tyy", "Tyz", "Tzx", "Tzy", "Tzz"}, {}};
    for (const auto &r : rows) {
        std::vector<std::string> cells{std::to_string(r.n), r.stage, r.qubit};
        for (const auto &row : r.t) {
            for (double v : row) {
                cells.push_back(fmt(v));
            }
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

ResultTable tabulate(const std::vector<MixednessRow> &rows) {
    ResultTable t{{"n", "qubit", "purity", "bloch_x", "bloch_y", "bloch_z"}, {}};
    for (const auto &r : rows) {
        t.rows.push_back({std::to_string(r.n), r.qubit, fmt(r.purity), fmt(r.bloch[0]), fmt(r.bloch[1]),
                          fmt(r.bloch[2])});
    }
    return t;
}

std::vector<PlotPoint> plot_points(const std::vector<Exp1Row> &rows) {
    std::vector<PlotPoint> out;
    for (const auto &r : rows) {
        out.push_back({"bsm", static_cast<double>(r.bsm_metrics.two_qubit_layers), r.bsm.value, r.bsm.sigma});
        out.push_back({"pom", static_cast<double>(r.pom_metrics.two_qubit_layers), r.pom.value, r.pom.sigma});
    }
    std::stable_sort(out.begin(), out.end(), [](const PlotPoint &a, const PlotPoint &b) {
        return a.series != b.series ? a.series < b.series : a.x < b.x;
    });
    return out;
}

std::vector<PlotPoint> plot_points(const std::vector<Exp2Row> &rows) {
    std::vector<PlotPoint> out;
    for (const auto &r : rows) {
        out.push_back({r.scenario, static_cast<double>(r.n), r.sampled.s, r.sampled.sigma});
    }
    std::stable_sort(out.begin(), out.end(), [](const PlotPoint &a, const PlotPoint &b) {
        return a.series != b.series ? a.series < b.series : a.x < b.x;
    });
    return out;
}

std::string to_csv(const ResultTable &table) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << '\n';
    };
    line(table.columns);
    for (const auto &r : table.rows) {
        line(r);
    }
    return os.str();
}

std::string to_plot_data(const std::vector<PlotPoint> &points) {
    std::ostringstream os;
    os << "series,x,y,sigma\n";
    for (const auto &p : points) {
        os << p.series << ',' << p.x << ',' << fmt(p.y) << ',' << fmt(p.sigma) << '\n';
    }
    return os.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << content;
    if (!f.good()) {
        throw IoError("failed writing '" + path + "'");
    }
}

RunOutput run_configured(const ExperimentConfig &cfg) {
    cfg.validate();
    RunOutput out;
    auto finish = [&](const auto &rows) {
        out.csv = to_csv(tabulate(rows));
        out.rows = rows.size();
    };
    if (cfg.experiment == "exp1") {
        const auto rows = run_experiment1(cfg);
        finish(rows);
        out.plot = to_plot_data(plot_points(rows));
    } else if (cfg.experiment == "exp2") {
        const auto rows = run_experiment2(cfg);
        finish(rows);
        out.plot = to_plot_data(plot_points(rows));
    } else if (cfg.experiment == "exp3") {
        finish(run_experiment3(cfg));
    } else if (cfg.experiment == "exp4") {
        finish(run_experiment4(cfg));
    } else if (cfg.experiment == "corr-scan") {
        finish(run_correlation_scan(cfg));
    } else {
        finish(run_mixedness(cfg));
    }
    return out;
}

}  // namespace encclone
