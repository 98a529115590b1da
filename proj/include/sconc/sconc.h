// Copyright 2026 The sconc Authors
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

#ifndef SCONC_SCONC_H_
#define SCONC_SCONC_H_

#include <stdint.h>

#if defined(_WIN32)
#define SCONC_API __declspec(dllexport)
#else
#define SCONC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sconc_status {
  SCONC_OK = 0,
  SCONC_E_INVALID_ARGUMENT = 1,
  SCONC_E_PRECONDITION = 2,
  SCONC_E_PARSE = 3,
  SCONC_E_APPLICABILITY = 4,
  SCONC_E_NOT_FOUND = 5,
  SCONC_E_INTERNAL = 6
} sconc_status;

/* A loaded scenario: group, ambient context, state and optional script. */
typedef struct sconc_scenario sconc_scenario;

SCONC_API const char* sconc_version(void);
SCONC_API const char* sconc_status_name(sconc_status status);

/*
 * Every call that produces output stores a NUL-terminated JSON document in
 * *out, owned by the caller and released with sconc_string_free. On failure
 * the document is {"error": {"code": ..., "status": ..., "message": ...}}.
 */
SCONC_API void sconc_string_free(char* s);

SCONC_API sconc_status sconc_scenario_load(const char* path, sconc_scenario** scenario, char** out);
SCONC_API sconc_status sconc_scenario_parse(const char* json, sconc_scenario** scenario, char** out);
SCONC_API void sconc_scenario_free(sconc_scenario* scenario);
/* Canonical re-serialization and the state hash. */
SCONC_API sconc_status sconc_scenario_dump(const sconc_scenario* scenario, char** out);

SCONC_API sconc_status sconc_validate(const sconc_scenario* scenario, char** out);
SCONC_API sconc_status sconc_invariants(const sconc_scenario* scenario, char** out);
/*
 * script_json is a list of move records or a trace document; NULL runs the
 * scenario's own script. Recorded pre/post hashes are checked.
 */
SCONC_API sconc_status sconc_apply(const sconc_scenario* scenario, const char* script_json, char** out);
SCONC_API sconc_status sconc_simplify(const sconc_scenario* scenario, char** out);
SCONC_API sconc_status sconc_decide(const sconc_scenario* scenario, char** out);
SCONC_API sconc_status sconc_bound(const sconc_scenario* scenario, char** out);

SCONC_API sconc_status sconc_sweep(uint64_t seed, int count, int threads, char** out);

/* rule NULL runs every rule. */
SCONC_API sconc_status sconc_crosscheck(const char* rule, char** out);
/* params_json is an object of integer parameters, or NULL. Output is the
 * diagram text codec, not JSON. */
SCONC_API sconc_status sconc_scene(const char* name, const char* params_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SCONC_SCONC_H_ */
