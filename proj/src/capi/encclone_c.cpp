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


#include "encclone/encclone_c.h"

#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "encclone/circuit.h"
#include "encclone/config.h"
#include "encclone/error.h"
#include "encclone/experiments.h"
#include "encclone/protocol.h"
#include "encclone/verify.h"

struct encclone_config {
    std::string text;
    encclone::ExperimentConfig cfg;
    std::string scratch;
};

struct encclone_result {
    encclone::RunOutput out;
};

struct encclone_report {
    std::vector<encclone::VerifyCheck> checks;
};

struct encclone_circuit {
    encclone::Circuit circuit;
    std::string text;
};

namespace {

thread_local std::string last_error;

encclone_status fail(encclone_status s, const std::string &msg) {
    last_error = msg;
    return s;
}

// Runs f, mapping library exceptions onto status codes.
template <typename F>
encclone_status guarded(F &&f) {
    try {
        last_error.clear();
        f();
        return ENCCLONE_OK;
    } catch (const encclone::Error &e) {
        return fail(static_cast<encclone_status>(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(ENCCLONE_ERR_CAPACITY, "out of memory");
    } catch (const std::exception &e) {
        return fail(ENCCLONE_ERR_INTERNAL, e.what());
    }
}

bool null_arg(const void *p, const char *name) {
    if (p == nullptr) {
        last_error = std::string(name) + " must not be NULL";
        return true;
    }
    return false;
}

encclone_circuit *wrap(encclone::Circuit c) {
    auto *h = new encclone_circuit{std::move(c), {}};
    h->text = encclone::serialize(h->circuit);
    return h;
}

}  // namespace

extern "C" {

const char *encclone_version(void) {
    return "0.1.0";
}

const char *encclone_last_error(void) {
    return last_error.c_str();
}

const char *encclone_status_name(encclone_status status) {
    switch (status) {
        case ENCCLONE_OK:
            return "ok";
        case ENCCLONE_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case ENCCLONE_ERR_OUT_OF_RANGE:
            return "out of range";
        case ENCCLONE_ERR_CAPACITY:
            return "capacity exceeded";
        case ENCCLONE_ERR_NON_CLIFFORD:
            return "non-Clifford gate";
        case ENCCLONE_ERR_IO:
            return "i/o error";
        case ENCCLONE_ERR_PARSE:
            return "parse error";
        case ENCCLONE_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

encclone_status encclone_config_parse(const char *text, encclone_config **out) {
    if (null_arg(text, "text") || null_arg(out, "out")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto cfg = encclone::parse_config(text);
        *out = new encclone_config{text, std::move(cfg), {}};
    });
}

encclone_status encclone_config_load(const char *path, encclone_config **out) {
    if (null_arg(path, "path") || null_arg(out, "out")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::ifstream f(path, std::ios::binary);
        if (!f) {
            throw encclone::IoError(std::string("cannot read config file '") + path + "'");
        }
        std::ostringstream text;
        text << f.rdbuf();
        auto cfg = encclone::parse_config(text.str());
        *out = new encclone_config{text.str(), std::move(cfg), {}};
    });
}

encclone_status encclone_config_set(encclone_config *cfg, const char *key, const char *value) {
    if (null_arg(cfg, "cfg") || null_arg(key, "key") || null_arg(value, "value")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::string text = cfg->text;
        if (!text.empty() && text.back() != '\n') {
            text += '\n';
        }
        text += std::string(key) + " = " + value + "\n";
        cfg->cfg = encclone::parse_config(text);
        cfg->text = std::move(text);
    });
}

encclone_status encclone_config_get(const encclone_config *cfg, const char *key, const char **value) {
    if (null_arg(cfg, "cfg") || null_arg(key, "key") || null_arg(value, "value")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const auto &c = cfg->cfg;
        const std::string k = key;
        std::string v;
        if (k == "experiment") {
            v = c.experiment;
        } else if (k == "backend") {
            v = encclone::backend_name(c.backend);
        } else if (k == "shots") {
            v = std::to_string(c.shots);
        } else if (k == "seed") {
            v = std::to_string(c.seed);
        } else if (k == "noise") {
            v = c.noise ? "true" : "false";
        } else if (k == "out") {
            v = c.out;
        } else if (k == "plot_out") {
            v = c.plot_out;
        } else {
            throw encclone::InvalidArgument("config key '" + k + "' cannot be queried");
        }
        auto *mut = const_cast<encclone_config *>(cfg);
        mut->scratch = v;
        *value = mut->scratch.c_str();
    });
}

void encclone_config_free(encclone_config *cfg) {
    delete cfg;
}

encclone_status encclone_run(const encclone_config *cfg, encclone_result **out) {
    if (null_arg(cfg, "cfg") || null_arg(out, "out")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new encclone_result{encclone::run_configured(cfg->cfg)}; });
}

const char *encclone_result_csv(const encclone_result *result) {
    return result ? result->out.csv.c_str() : "";
}

const char *encclone_result_plot(const encclone_result *result) {
    return result ? result->out.plot.c_str() : "";
}

size_t encclone_result_rows(const encclone_result *result) {
    return result ? result->out.rows : 0;
}

void encclone_result_free(encclone_result *result) {
    delete result;
}

encclone_status encclone_verify(encclone_report **out) {
    if (null_arg(out, "out")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new encclone_report{encclone::run_verification()}; });
}

size_t encclone_report_size(const encclone_report *report) {
    return report ? report->checks.size() : 0;
}

encclone_status encclone_report_check(const encclone_report *report, size_t index, const char **name,
                                      double *deviation, double *tolerance, int *passed) {
    if (null_arg(report, "report")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    if (index >= report->checks.size()) {
        return fail(ENCCLONE_ERR_OUT_OF_RANGE, "check index " + std::to_string(index) + " out of range");
    }
    const auto &c = report->checks[index];
    if (name) {
        *name = c.name.c_str();
    }
    if (deviation) {
        *deviation = c.deviation;
    }
    if (tolerance) {
        *tolerance = c.tolerance;
    }
    if (passed) {
        *passed = c.passed ? 1 : 0;
    }
    return ENCCLONE_OK;
}

int encclone_report_all_passed(const encclone_report *report) {
    if (!report) {
        return 0;
    }
    for (const auto &c : report->checks) {
        if (!c.passed) {
            return 0;
        }
    }
    return 1;
}

void encclone_report_free(encclone_report *report) {
    delete report;
}

encclone_status encclone_circuit_parse(const char *text, encclone_circuit **out) {
    if (null_arg(text, "text") || null_arg(out, "out")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = wrap(encclone::parse_circuit(text)); });
}

encclone_status encclone_circuit_pipeline(size_t n, size_t j, encclone_circuit **out) {
    if (null_arg(out, "out")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = wrap(encclone::build_pipeline(n, j).circuit); });
}

encclone_status encclone_circuit_lower(const encclone_circuit *circuit, encclone_circuit **out) {
    if (null_arg(circuit, "circuit") || null_arg(out, "out")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = wrap(encclone::lower_to_native(circuit->circuit)); });
}

const char *encclone_circuit_text(const encclone_circuit *circuit) {
    return circuit ? circuit->text.c_str() : "";
}

size_t encclone_circuit_qubits(const encclone_circuit *circuit) {
    return circuit ? circuit->circuit.num_qubits() : 0;
}

encclone_status encclone_circuit_metrics(const encclone_circuit *circuit, size_t *two_qubit_layers,
                                         size_t *two_qubit_gates, double *duration_us) {
    if (null_arg(circuit, "circuit")) {
        return ENCCLONE_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const auto m = encclone::layer_metrics(circuit->circuit);
        if (two_qubit_layers) {
            *two_qubit_layers = m.two_qubit_layers;
        }
        if (two_qubit_gates) {
            *two_qubit_gates = m.two_qubit_gates;
        }
        if (duration_us) {
            *duration_us = m.total_duration;
        }
    });
}

void encclone_circuit_free(encclone_circuit *circuit) {
    delete circuit;
}

}  // extern "C"
