// Copyright 2026 The detcirc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DETCIRC_DETCIRC_H_
#define DETCIRC_DETCIRC_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(DETCIRC_BUILDING_LIBRARY)
#define DETCIRC_API __attribute__((visibility("default")))
#else
#define DETCIRC_API
#endif

typedef enum dc_status {
  DC_OK = 0,
  DC_ERR_INVALID_ARGUMENT = 1,
  DC_ERR_PARSE = 2,
  DC_ERR_VALIDATION = 3,
  DC_ERR_TOO_LARGE = 4,
  DC_ERR_IO = 5,
  DC_ERR_MISMATCH = 6,
  DC_ERR_INTERNAL = 7
} dc_status;

typedef enum dc_field {
  DC_FIELD_AUTO = 0, /* taken from a `field` line, rational when absent */
  DC_FIELD_RATIONAL = 1,
  DC_FIELD_COMPLEX = 2
} dc_field;

typedef struct dc_circuit dc_circuit;
typedef struct dc_pfaffian dc_pfaffian;
typedef struct dc_graph dc_graph;

/* Strings returned through char** out-parameters are owned by the caller and
 * released with dc_string_free. Handles are released with their _free
 * function; passing NULL is allowed. */

DETCIRC_API const char* dc_version(void);
DETCIRC_API const char* dc_status_name(dc_status status);
/* Message of the last failing call on this thread, "" if none. */
DETCIRC_API const char* dc_last_error(void);
DETCIRC_API void dc_string_free(char* s);

DETCIRC_API dc_status dc_circuit_parse(const char* text, dc_field field, dc_circuit** out);
DETCIRC_API dc_status dc_circuit_load(const char* path, dc_field field, dc_circuit** out);
DETCIRC_API void dc_circuit_free(dc_circuit* c);
DETCIRC_API dc_field dc_circuit_field(const dc_circuit* c);
DETCIRC_API dc_status dc_circuit_serialize(const dc_circuit* c, char** text);
DETCIRC_API dc_status dc_circuit_evaluate(const dc_circuit* c, char** value);
/* Brute-force tensor contraction; cap 0 selects the default wire cap. */
DETCIRC_API dc_status dc_circuit_oracle(const dc_circuit* c, size_t cap, char** value);
/* Compares evaluate, the oracle and the multicycle total. Returns
 * DC_ERR_MISMATCH (with the report still filled in) when they disagree. */
DETCIRC_API dc_status dc_circuit_check(const dc_circuit* c, size_t cap, char** report);
DETCIRC_API dc_status dc_circuit_multicycles(const dc_circuit* c, size_t cap, char** report);
DETCIRC_API dc_status dc_circuit_width_depth(const dc_circuit* c, size_t* width, size_t* depth);
DETCIRC_API dc_status dc_circuit_compile(const dc_circuit* c, dc_pfaffian** out, char** size_ratio);

DETCIRC_API dc_status dc_pfaffian_parse(const char* text, dc_field field, dc_pfaffian** out);
DETCIRC_API dc_status dc_pfaffian_load(const char* path, dc_field field, dc_pfaffian** out);
DETCIRC_API void dc_pfaffian_free(dc_pfaffian* pc);
DETCIRC_API dc_status dc_pfaffian_evaluate(const dc_pfaffian* pc, char** value);
DETCIRC_API dc_status dc_pfaffian_oracle(const dc_pfaffian* pc, size_t cap, char** value);
DETCIRC_API dc_status dc_pfaffian_serialize(const dc_pfaffian* pc, char** text);

DETCIRC_API dc_status dc_graph_parse(const char* text, dc_graph** out);
DETCIRC_API dc_status dc_graph_load(const char* path, dc_graph** out);
DETCIRC_API void dc_graph_free(dc_graph* g);
DETCIRC_API dc_status dc_graph_reorient(const dc_graph* g, uint64_t seed, dc_graph** out);
DETCIRC_API dc_status dc_graph_rooted_forests(const dc_graph* g, char** count);
DETCIRC_API dc_status dc_graph_spanning_trees(const dc_graph* g, char** count);
/* Space-separated coefficients, ascending in the number of roots. */
DETCIRC_API dc_status dc_graph_forest_polynomial(const dc_graph* g, char** coefficients);
DETCIRC_API dc_status dc_graph_circuit(const dc_graph* g, dc_circuit** out);

#ifdef __cplusplus
}
#endif

#endif  // DETCIRC_DETCIRC_H_
