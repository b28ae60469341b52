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


#include <cstring>
#include <string>

#include "encclone/encclone_c.h"
#include "gtest/gtest.h"

namespace {

TEST(CApi, RunsConfiguredExperiment) {
    encclone_config *cfg = nullptr;
    ASSERT_EQ(encclone_config_parse("experiment = exp1\nn = 2\nshots = 100\n", &cfg), ENCCLONE_OK);
    ASSERT_EQ(encclone_config_set(cfg, "seed", "7"), ENCCLONE_OK);
    const char *seed = nullptr;
    ASSERT_EQ(encclone_config_get(cfg, "seed", &seed), ENCCLONE_OK);
    EXPECT_STREQ(seed, "7");
    encclone_result *res = nullptr;
    ASSERT_EQ(encclone_run(cfg, &res), ENCCLONE_OK);
    EXPECT_EQ(encclone_result_rows(res), 1u);
    const std::string csv = encclone_result_csv(res);
    EXPECT_EQ(csv.rfind("n,N_qubits,L2q_bsm,Fe_bsm,sigma_bsm,L2q_pom,Fe_pom,sigma_pom\n", 0), 0u);
    encclone_result_free(res);
    encclone_config_free(cfg);
}

TEST(CApi, ErrorsCarryCodesAndMessages) {
    encclone_config *cfg = nullptr;
    EXPECT_EQ(encclone_config_parse("shots = many\n", &cfg), ENCCLONE_ERR_PARSE);
    EXPECT_NE(std::strlen(encclone_last_error()), 0u);
    EXPECT_EQ(encclone_config_load("/nonexistent.cfg", &cfg), ENCCLONE_ERR_IO);
    EXPECT_EQ(encclone_config_parse(nullptr, &cfg), ENCCLONE_ERR_INVALID_ARGUMENT);

    ASSERT_EQ(encclone_config_parse("experiment = exp1\n", &cfg), ENCCLONE_OK);
    EXPECT_EQ(encclone_config_set(cfg, "backend", "warp"), ENCCLONE_ERR_PARSE);
    ASSERT_EQ(encclone_config_set(cfg, "noise", "true"), ENCCLONE_OK);
    encclone_result *res = nullptr;
    EXPECT_EQ(encclone_run(cfg, &res), ENCCLONE_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(res, nullptr);
    encclone_config_free(cfg);
}

TEST(CApi, VerificationReport) {
    encclone_report *rep = nullptr;
    ASSERT_EQ(encclone_verify(&rep), ENCCLONE_OK);
    EXPECT_GT(encclone_report_size(rep), 10u);
    EXPECT_EQ(encclone_report_all_passed(rep), 1);
    const char *name = nullptr;
    int passed = 0;
    EXPECT_EQ(encclone_report_check(rep, 0, &name, nullptr, nullptr, &passed), ENCCLONE_OK);
    EXPECT_EQ(passed, 1);
    EXPECT_EQ(encclone_report_check(rep, 10000, &name, nullptr, nullptr, &passed), ENCCLONE_ERR_OUT_OF_RANGE);
    encclone_report_free(rep);
}

TEST(CApi, CircuitRoundTrip) {
    encclone_circuit *c = nullptr;
    ASSERT_EQ(encclone_circuit_pipeline(2, 1, &c), ENCCLONE_OK);
    EXPECT_EQ(encclone_circuit_qubits(c), 6u);
    size_t layers = 0, gates = 0;
    double duration = 0;
    ASSERT_EQ(encclone_circuit_metrics(c, &layers, &gates, &duration), ENCCLONE_OK);
    EXPECT_EQ(gates, 15u);
    encclone_circuit *parsed = nullptr;
    ASSERT_EQ(encclone_circuit_parse(encclone_circuit_text(c), &parsed), ENCCLONE_OK);
    EXPECT_STREQ(encclone_circuit_text(parsed), encclone_circuit_text(c));
    encclone_circuit *low = nullptr;
    ASSERT_EQ(encclone_circuit_lower(c, &low), ENCCLONE_OK);
    EXPECT_EQ(std::string(encclone_circuit_text(low)).find("\nH "), std::string::npos);
    encclone_circuit_free(low);
    encclone_circuit_free(parsed);
    encclone_circuit_free(c);
    EXPECT_EQ(encclone_circuit_pipeline(2, 5, &c), ENCCLONE_ERR_OUT_OF_RANGE);
}

}  // namespace
