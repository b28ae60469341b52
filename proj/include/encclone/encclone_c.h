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


/* C interface to the encrypted-cloning toolkit. Every object is an opaque
 * handle released with its matching *_free function. Functions returning
 * encclone_status set a thread-local message readable with
 * encclone_last_error() whenever they fail. Strings returned by accessors are
 * owned by the handle and stay valid until it is freed. */

#ifndef ENCCLONE_C_H
#define ENCCLONE_C_H

#include <stddef.h>

#if defined(ENCCLONE_BUILDING_LIBRARY)
#define ENCCLONE_API __attribute__((visibility("default")))
#else
#define ENCCLONE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum encclone_status {
    ENCCLONE_OK = 0,
    ENCCLONE_ERR_INVALID_ARGUMENT = 1,
    ENCCLONE_ERR_OUT_OF_RANGE = 2,
    ENCCLONE_ERR_CAPACITY = 3,
    ENCCLONE_ERR_NON_CLIFFORD = 4,
    ENCCLONE_ERR_IO = 5,
    ENCCLONE_ERR_PARSE = 6,
    ENCCLONE_ERR_INTERNAL = 100
} encclone_status;

typedef struct encclone_config encclone_config;
typedef struct encclone_result encclone_result;
typedef struct encclone_report encclone_report;
typedef struct encclone_circuit encclone_circuit;

ENCCLONE_API const char *encclone_version(void);
/* Message of the most recent failure on this thread, "" if none. */
ENCCLONE_API const char *encclone_last_error(void);
ENCCLONE_API const char *encclone_status_name(encclone_status status);

/* Configuration: key = value text, '#' starts a comment. */
ENCCLONE_API encclone_status encclone_config_parse(const char *text, encclone_config **out);
ENCCLONE_API encclone_status encclone_config_load(const char *path, encclone_config **out);
/* Overrides one key as if "key = value" were appended to the file. */
ENCCLONE_API encclone_status encclone_config_set(encclone_config *cfg, const char *key, const char *value);
ENCCLONE_API encclone_status encclone_config_get(const encclone_config *cfg, const char *key, const char **value);
ENCCLONE_API void encclone_config_free(encclone_config *cfg);

/* Runs the configured experiment. */
ENCCLONE_API encclone_status encclone_run(const encclone_config *cfg, encclone_result **out);
ENCCLONE_API const char *encclone_result_csv(const encclone_result *result);
/* Plot data ("series,x,y,sigma"); empty for experiments without a curve. */
ENCCLONE_API const char *encclone_result_plot(const encclone_result *result);
ENCCLONE_API size_t encclone_result_rows(const encclone_result *result);
ENCCLONE_API void encclone_result_free(encclone_result *result);

/* Oracle-equivalence and invariant checks. */
ENCCLONE_API encclone_status encclone_verify(encclone_report **out);
ENCCLONE_API size_t encclone_report_size(const encclone_report *report);
ENCCLONE_API encclone_status encclone_report_check(const encclone_report *report, size_t index, const char **name,
                                                   double *deviation, double *tolerance, int *passed);
ENCCLONE_API int encclone_report_all_passed(const encclone_report *report);
ENCCLONE_API void encclone_report_free(encclone_report *report);

/* Circuits in the text format ("QUBITS n", "ROLE q name", one gate per line). */
ENCCLONE_API encclone_status encclone_circuit_parse(const char *text, encclone_circuit **out);
/* Bell preparation, encryption and decryption of clone j for n clones. */
ENCCLONE_API encclone_status encclone_circuit_pipeline(size_t n, size_t j, encclone_circuit **out);
ENCCLONE_API encclone_status encclone_circuit_lower(const encclone_circuit *circuit, encclone_circuit **out);
ENCCLONE_API const char *encclone_circuit_text(const encclone_circuit *circuit);
ENCCLONE_API size_t encclone_circuit_qubits(const encclone_circuit *circuit);
ENCCLONE_API encclone_status encclone_circuit_metrics(const encclone_circuit *circuit, size_t *two_qubit_layers,
                                                      size_t *two_qubit_gates, double *duration_us);
ENCCLONE_API void encclone_circuit_free(encclone_circuit *circuit);

#ifdef __cplusplus
}
#endif

#endif
