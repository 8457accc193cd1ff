// Copyright 2026 The lqcsim Authors
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

#ifndef LQC_LQC_H
#define LQC_LQC_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(LQC_BUILDING_LIBRARY)
#define LQC_API __declspec(dllexport)
#else
#define LQC_API __declspec(dllimport)
#endif
#else
#define LQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lqc_status {
    LQC_OK = 0,
    LQC_ERR_INVALID_ARGUMENT = 1,
    LQC_ERR_PARSE = 2,
    LQC_ERR_SIZE_LIMIT = 3,
    LQC_ERR_UNOBSERVABLE = 4,
    LQC_ERR_ALGORITHM = 5,
    LQC_ERR_INTERNAL = 6
} lqc_status;

typedef struct lqc_circuit lqc_circuit;
typedef struct lqc_state lqc_state;

LQC_API const char *lqc_version(void);
LQC_API const char *lqc_status_name(lqc_status status);

/* Message of the last failed call on this thread; empty after a success. */
LQC_API const char *lqc_last_error(void);

/* Releases strings returned through char ** out-parameters. */
LQC_API void lqc_string_free(char *text);

/* Circuit JSON: wires, gates, measurements and an optional initial bitstring. */
LQC_API lqc_status lqc_circuit_parse(const char *json, lqc_circuit **out);
LQC_API void lqc_circuit_free(lqc_circuit *circuit);
LQC_API size_t lqc_circuit_wire_count(const lqc_circuit *circuit);
LQC_API size_t lqc_circuit_gate_count(const lqc_circuit *circuit);

/* The initial state declared by the circuit document. */
LQC_API lqc_status lqc_circuit_initial_state(const lqc_circuit *circuit, lqc_state **out);
/* Basis state over the circuit's layout; bits has one character per wire. */
LQC_API lqc_status lqc_state_basis(const lqc_circuit *circuit, const char *bits, lqc_state **out);
LQC_API void lqc_state_free(lqc_state *state);

LQC_API lqc_status lqc_execute(const lqc_circuit *circuit, const lqc_state *input, lqc_state **out);

/* Indefinite norm in true units (may overflow to infinity) and in stored units. */
LQC_API lqc_status lqc_state_indefinite_norm(const lqc_state *state, double *out);
LQC_API lqc_status lqc_state_indefinite_norm_scaled(const lqc_state *state, double *out);
LQC_API lqc_status lqc_state_log_scale(const lqc_state *state, double *out);
/* Renormalized observable probability of a qubit-only bitstring. */
LQC_API lqc_status lqc_state_probability(const lqc_state *state, const char *qubit_bits, double *out);
LQC_API lqc_status lqc_state_to_json(const lqc_state *state, char **out);

/* Runs a subcommand (run, mis, majsat, maxkis, pathsum, postselect,
   superpostselect). input is the file text or NULL, options_json a JSON
   object or NULL, format "json" or "csv" or NULL for json. */
LQC_API lqc_status lqc_command(const char *name, const char *input, const char *options_json, const char *format,
                               char **report);

#ifdef __cplusplus
}
#endif

#endif
