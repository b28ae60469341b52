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


#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "encclone/config.h"
#include "encclone/error.h"
#include "encclone/experiments.h"
#include "encclone/verify.h"
#include "gtest/gtest.h"

namespace encclone {
namespace {

TEST(Config, ParsesKeysRangesAndComments) {
    ExperimentConfig c = parse_config(
        "# sweep\n"
        "experiment = exp2\n"
        "n = 2..4   # inclusive\n"
        "scenarios = 2-1, 2-3\n"
        "shots = 500\n"
        "backend = tableau-trajectory\n"
        "noise = true\n"
        "p2q = 0.01\n"
        "t1 = inf\n"
        "t2 = inf\n");
    EXPECT_EQ(c.experiment, "exp2");
    EXPECT_EQ(c.n_values, (std::vector<std::size_t>{2, 3, 4}));
    EXPECT_EQ(c.scenarios, (std::vector<std::string>{"2-1", "2-3"}));
    EXPECT_EQ(c.shots, 500u);
    EXPECT_EQ(c.backend, Backend::Trajectory);
    EXPECT_TRUE(c.noise);
    EXPECT_DOUBLE_EQ(c.noise_params.p2q, 0.01);
    EXPECT_FALSE(c.noise_params.idle_enabled());
    EXPECT_NO_THROW(c.validate());
}

TEST(Config, ListsAndLaterKeysWin) {
    ExperimentConfig c = parse_config("l = 0,2\nseed = 4\nseed = 9\n");
    EXPECT_EQ(c.l_values, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(c.seed, 9u);
}

TEST(Config, ErrorsNameTheLine) {
    try {
        parse_config("shots = 10\nbogus = 1\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_config("shots = ten\n"), ParseError);
    EXPECT_THROW(parse_config("backend = quantum\n"), Error);
    EXPECT_THROW(parse_config("just words\n"), ParseError);
}

TEST(Config, ValidationRejectsNoisyStateVector) {
    ExperimentConfig c;
    c.noise = true;
    EXPECT_THROW(c.validate(), InvalidArgument);
    c.backend = Backend::Density;
    EXPECT_NO_THROW(c.validate());
    c.experiment = "exp9";
    EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(Config, MissingFileIsIoError) {
    EXPECT_THROW(load_config("/nonexistent/config.txt"), IoError);
}

ExperimentConfig small(const std::string &experiment) {
    ExperimentConfig c;
    c.experiment = experiment;
    c.n_values = {2, 3};
    c.l_values = {0, 1};
    c.r_values = {1, 2};
    c.shots = 400;
    return c;
}

TEST(Harness, Exp1CsvHeaderAndDeterminism) {
    ExperimentConfig c = small("exp1");
    RunOutput a = run_configured(c);
    RunOutput b = run_configured(c);
    EXPECT_EQ(a.csv, b.csv);
    EXPECT_EQ(a.csv.substr(0, a.csv.find('\n')), "n,N_qubits,L2q_bsm,Fe_bsm,sigma_bsm,L2q_pom,Fe_pom,sigma_pom");
    EXPECT_EQ(a.rows, 2u);
    EXPECT_EQ(a.plot.substr(0, a.plot.find('\n')), "series,x,y,sigma");
    c.seed = 2;
    c.backend = Backend::Density;
    c.noise = true;
    EXPECT_NE(run_configured(c).csv, a.csv);
}

TEST(Harness, Exp1NoiselessRowsAreExact) {
    for (Backend b : {Backend::Statevector, Backend::Density, Backend::Trajectory}) {
        ExperimentConfig c = small("exp1");
        c.backend = b;
        for (const auto &row : run_experiment1(c)) {
            EXPECT_NEAR(row.exact.value, 1.0, 1e-9) << backend_name(b);
            EXPECT_DOUBLE_EQ(row.bsm.value, 1.0);
            EXPECT_EQ(row.qubits, 2 * row.n + 2);
        }
    }
}

TEST(Harness, Exp1NoisyBackendsAgree) {
    ExperimentConfig c = small("exp1");
    c.n_values = {2};
    c.noise = true;
    c.noise_params.p2q = 0.02;
    c.noise_params.twirl_idle = true;
    c.noise_params.trajectories = 20000;
    c.backend = Backend::Density;
    const double exact = run_experiment1(c)[0].exact.value;
    c.backend = Backend::Trajectory;
    const auto traj = run_experiment1(c)[0].exact;
    EXPECT_GT(traj.sigma, 0.0);
    EXPECT_NEAR(traj.value, exact, 5 * traj.sigma);
    EXPECT_LT(exact, 0.99);
}

TEST(Harness, Exp2ScenariosAndUndecrypted) {
    ExperimentConfig c = small("exp2");
    c.scenarios = {"2-1", "2-2", "2-3", "undecrypted"};
    for (const auto &row : run_experiment2(c)) {
        const double want = row.scenario == "undecrypted" ? 0.0 : 2 * std::sqrt(2.0);
        EXPECT_NEAR(row.exact.s, want, 1e-9) << row.scenario;
        EXPECT_NEAR(row.sampled.s, want, 4 * row.sampled.sigma + 1e-12) << row.scenario;
    }
}

TEST(Harness, Exp2TrajectoryUsesPauliSettings) {
    ExperimentConfig c = small("exp2");
    c.backend = Backend::Trajectory;
    for (const auto &row : run_experiment2(c)) {
        EXPECT_NEAR(row.exact.s, 2 * std::sqrt(2.0), 1e-12);
        EXPECT_NEAR(row.sampled.s, 2 * std::sqrt(2.0), 4 * row.sampled.sigma + 1e-12);
    }
}

TEST(Harness, ChshCircuitsOrderReadouts) {
    auto none = [](Circuit &, Qubit, ChshQubit) {};
    Circuit c21 = build_chsh_circuit(2, "2-1", none);
    Circuit c23 = build_chsh_circuit(2, "2-3", none);
    // Atilde is read out first in 2-1 and last in 2-3.
    std::vector<Qubit> m21, m23;
    for (const auto &op : c21.ops()) {
        if (op.gate.kind == GateKind::MEASURE) {
            m21.push_back(op.qubits[0]);
        }
    }
    for (const auto &op : c23.ops()) {
        if (op.gate.kind == GateKind::MEASURE) {
            m23.push_back(op.qubits[0]);
        }
    }
    EXPECT_EQ(m21, (std::vector<Qubit>{0, 2}));
    EXPECT_EQ(m23, (std::vector<Qubit>{2, 0}));
    // Split readouts serialise: each costs one extra 3 us readout over 2-2.
    const GateDurations d = GateDurations::defaults();
    const double joint = total_duration(build_chsh_circuit(2, "2-2", none), d);
    EXPECT_GE(total_duration(c21, d), joint + 3.0 - 1e-9);
    EXPECT_GE(total_duration(c23, d), joint + 3.0 - 1e-9);
    EXPECT_THROW(build_chsh_circuit(2, "2-9", none), InvalidArgument);
}

TEST(Harness, Exp3RowsAndCapacityMessage) {
    ExperimentConfig c = small("exp3");
    c.backend = Backend::Trajectory;
    c.l_values = {0, 1, 2};
    auto rows = run_experiment3(c);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[2].qubits, 54u);
    EXPECT_EQ(rows[2].clones, 27u);
    for (const auto &r : rows) {
        EXPECT_DOUBLE_EQ(r.fidelity.value, 1.0);
    }
    c.backend = Backend::Statevector;
    try {
        run_experiment3(c);
        FAIL();
    } catch (const CapacityError &e) {
        EXPECT_NE(std::string(e.what()).find("54 qubits"), std::string::npos) << e.what();
    }
}

TEST(Harness, Exp4SmallGhz) {
    ExperimentConfig c = small("exp4");
    for (const auto &row : run_experiment4(c)) {
        EXPECT_NEAR(row.fidelity.value, 1.0, 1e-9);
        ASSERT_TRUE(row.sampled.has_value());
        EXPECT_EQ(row.classification, Classification::Witnessed);
    }
    c.backend = Backend::Trajectory;
    c.r_values = {3};
    auto rows = run_experiment4(c);
    EXPECT_NEAR(rows[0].fidelity.value, 1.0, 1e-9);
    EXPECT_FALSE(rows[0].sampled.has_value());
}

TEST(Harness, CorrelationScanAndMixedness) {
    ExperimentConfig c = small("corr-scan");
    for (const auto &row : run_correlation_scan(c)) {
        double max = 0;
        for (const auto &r : row.t) {
            for (double v : r) {
                max = std::max(max, v);
            }
        }
        if (row.stage == "encrypted") {
            EXPECT_LT(max, 1e-10) << row.qubit;
        }
        if (row.stage == "prepared" && row.qubit == "A") {
            EXPECT_NEAR(max, 1.0, 1e-12);
        }
    }
    for (const auto &row : run_mixedness(small("mixedness"))) {
        EXPECT_NEAR(row.purity, 0.5, 1e-10) << row.qubit;
    }
}

TEST(Outputs, CsvAndPlotFormatting) {
    ResultTable t{{"a", "b"}, {{"1", "x"}, {"2", "y"}}};
    EXPECT_EQ(to_csv(t), "a,b\n1,x\n2,y\n");
    EXPECT_EQ(to_plot_data({{"s", 3, 0.5, 0.25}}), "series,x,y,sigma\ns,3,0.500000,0.250000\n");
    EXPECT_THROW(write_text_file("/nonexistent/dir/out.csv", "x"), IoError);
}

TEST(Verify, AllChecksPass) {
    for (const auto &c : run_verification()) {
        EXPECT_TRUE(c.passed) << c.name << " deviation " << c.deviation;
    }
}

}  // namespace
}  // namespace encclone
