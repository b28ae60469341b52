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


// Command-line front end over the C library.
//
//   encclone run <experiment> [--config PATH] [--seed N] [--shots N]
//                [--backend B] [--out PATH] [--plot-out PATH]
//   encclone verify
//   encclone circuit --n N [--j J] [--lower]

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "encclone/encclone_c.h"

namespace {

int report(encclone_status s) {
    std::fprintf(stderr, "encclone: %s: %s\n", encclone_status_name(s), encclone_last_error());
    return static_cast<int>(s);
}

bool write_or_print(const std::string &path, const char *content) {
    if (path.empty() || path == "-") {
        std::fputs(content, stdout);
        return true;
    }
    std::FILE *f = std::fopen(path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "encclone: cannot open '%s' for writing\n", path.c_str());
        return false;
    }
    const bool ok = std::fputs(content, f) >= 0;
    return std::fclose(f) == 0 && ok;
}

struct RunArgs {
    std::string experiment;
    std::string config;
    std::string seed, shots, backend, out, plot_out;
};

int do_run(const RunArgs &a) {
    encclone_config *cfg = nullptr;
    encclone_status s = a.config.empty() ? encclone_config_parse("", &cfg) : encclone_config_load(a.config.c_str(), &cfg);
    if (s != ENCCLONE_OK) {
        return report(s);
    }
    const std::pair<const char *, const std::string *> overrides[] = {
        {"experiment", &a.experiment}, {"seed", &a.seed}, {"shots", &a.shots},
        {"backend", &a.backend},       {"out", &a.out},   {"plot_out", &a.plot_out},
    };
    for (const auto &[key, value] : overrides) {
        if (!value->empty() && (s = encclone_config_set(cfg, key, value->c_str())) != ENCCLONE_OK) {
            encclone_config_free(cfg);
            return report(s);
        }
    }
    const char *out = "";
    const char *plot_out = "";
    encclone_config_get(cfg, "out", &out);
    const std::string out_path = out;
    encclone_config_get(cfg, "plot_out", &plot_out);
    const std::string plot_path = plot_out;

    encclone_result *res = nullptr;
    s = encclone_run(cfg, &res);
    encclone_config_free(cfg);
    if (s != ENCCLONE_OK) {
        return report(s);
    }
    int code = 0;
    if (!write_or_print(out_path, encclone_result_csv(res))) {
        code = ENCCLONE_ERR_IO;
    } else if (!plot_path.empty() && !write_or_print(plot_path, encclone_result_plot(res))) {
        code = ENCCLONE_ERR_IO;
    }
    if (code == 0 && !out_path.empty() && out_path != "-") {
        std::fprintf(stderr, "wrote %zu rows to %s\n", encclone_result_rows(res), out_path.c_str());
    }
    encclone_result_free(res);
    return code;
}

int do_verify() {
    encclone_report *rep = nullptr;
    encclone_status s = encclone_verify(&rep);
    if (s != ENCCLONE_OK) {
        return report(s);
    }
    const std::size_t n = encclone_report_size(rep);
    for (std::size_t i = 0; i < n; ++i) {
        const char *name = nullptr;
        double dev = 0, tol = 0;
        int passed = 0;
        encclone_report_check(rep, i, &name, &dev, &tol, &passed);
        std::printf("%s  %-60s deviation %.3g (tolerance %.3g)\n", passed ? "PASS" : "FAIL", name, dev, tol);
    }
    const bool ok = encclone_report_all_passed(rep) != 0;
    encclone_report_free(rep);
    if (!ok) {
        std::fprintf(stderr, "encclone: verification failed\n");
        return 1;
    }
    return 0;
}

int do_circuit(std::size_t n, std::size_t j, bool lower) {
    encclone_circuit *c = nullptr;
    encclone_status s = encclone_circuit_pipeline(n, j, &c);
    if (s != ENCCLONE_OK) {
        return report(s);
    }
    if (lower) {
        encclone_circuit *l = nullptr;
        s = encclone_circuit_lower(c, &l);
        encclone_circuit_free(c);
        if (s != ENCCLONE_OK) {
            return report(s);
        }
        c = l;
    }
    std::fputs(encclone_circuit_text(c), stdout);
    encclone_circuit_free(c);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Encrypted-cloning simulation toolkit"};
    app.require_subcommand(1);

    RunArgs ra;
    auto *run = app.add_subcommand("run", "Run an experiment sweep and emit CSV");
    run->add_option("experiment", ra.experiment, "exp1, exp2, exp3, exp4, corr-scan or mixedness")->required();
    run->add_option("--config", ra.config, "Key-value config file");
    run->add_option("--seed", ra.seed, "Master seed");
    run->add_option("--shots", ra.shots, "Shots per measurement setting");
    run->add_option("--backend", ra.backend, "statevector, density or tableau-trajectory");
    run->add_option("--out", ra.out, "CSV output path (stdout when omitted)");
    run->add_option("--plot-out", ra.plot_out, "Plot data output path");

    app.add_subcommand("verify", "Run the oracle-equivalence and invariant checks");

    std::size_t n = 2, j = 1;
    bool lower = false;
    auto *circ = app.add_subcommand("circuit", "Print the end-to-end circuit for n clones");
    circ->add_option("--n", n, "Number of clones")->required();
    circ->add_option("--j", j, "Clone to decrypt");
    circ->add_flag("--lower", lower, "Lower to the native gate set");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        return do_run(ra);
    }
    if (circ->parsed()) {
        return do_circuit(n, j, lower);
    }
    return do_verify();
}
