// Copyright 2026 The arcgon Authors
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

/* C interface to the arcgon library.
 *
 * Every function returns an arcgon_status. On failure the message of the
 * last error on the calling thread is available from arcgon_last_error().
 * Strings handed out through char** parameters are owned by the caller and
 * released with arcgon_string_free(); sets with arcgon_set_free().
 *
 * Arcs are passed as text: "1 3" on a polygon, "(0, 1) (0, 3)" on a thread
 * order. */
#ifndef ARCGON_ARCGON_H
#define ARCGON_ARCGON_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(ARCGON_BUILDING)
#define ARCGON_API __declspec(dllexport)
#else
#define ARCGON_API __declspec(dllimport)
#endif
#else
#define ARCGON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct arcgon_set arcgon_set;

typedef enum arcgon_status {
  ARCGON_OK = 0,
  ARCGON_ERR_NULL_ARGUMENT = 1,
  ARCGON_ERR_DOMAIN = 2,
  ARCGON_ERR_OVERFLOW = 3,
  ARCGON_ERR_PARSE = 4,
  ARCGON_ERR_SEMANTIC = 5,
  ARCGON_ERR_NOT_NONCROSSING = 6,
  ARCGON_ERR_CANNOT_FLIP = 7,
  ARCGON_ERR_NOT_REACHABLE = 8,
  ARCGON_ERR_NOT_LAURENT = 9,
  ARCGON_ERR_UNSUPPORTED = 10,
  ARCGON_ERR_INVARIANT = 11,
  ARCGON_ERR_INTERNAL = 12
} arcgon_status;

ARCGON_API const char* arcgon_last_error(void);
ARCGON_API const char* arcgon_status_name(arcgon_status status);
ARCGON_API void arcgon_string_free(char* s);

ARCGON_API arcgon_status arcgon_set_parse(const char* text, arcgon_set** out);
ARCGON_API arcgon_status arcgon_set_builtin(int index, arcgon_set** out);
ARCGON_API arcgon_status arcgon_set_clone(const arcgon_set* s, arcgon_set** out);
ARCGON_API void arcgon_set_free(arcgon_set* s);
ARCGON_API arcgon_status arcgon_set_print(const arcgon_set* s, char** out);
ARCGON_API arcgon_status arcgon_set_contains(const arcgon_set* s, const char* arc, int* out);

/* Verdicts: *out is 1 or 0. The set-level deciders need a noncrossing set. */
ARCGON_API arcgon_status arcgon_is_noncrossing(const arcgon_set* s, int* out);
ARCGON_API arcgon_status arcgon_is_connected(const arcgon_set* s, int* out);
ARCGON_API arcgon_status arcgon_is_maximal(const arcgon_set* s, int* out);
ARCGON_API arcgon_status arcgon_is_triangulation(const arcgon_set* s, int* out);
ARCGON_API arcgon_status arcgon_is_locally_finite(const arcgon_set* s, int* out);
ARCGON_API arcgon_status arcgon_is_cluster_tilting(const arcgon_set* s, int* out);

/* Human-readable verdicts with witnesses, one per line. */
ARCGON_API arcgon_status arcgon_check_report(const arcgon_set* s, char** out);

/* Flips `arc`; *out receives the new set, *step (optional) a description. */
ARCGON_API arcgon_status arcgon_flip(const arcgon_set* s, const char* arc, arcgon_set** out,
                                     char** step);
/* The greedy flip sequence toward `arc`, one step per line. */
ARCGON_API arcgon_status arcgon_reach(const arcgon_set* s, const char* arc, arcgon_set** out,
                                      char** steps);
/* Whether `arc` crosses finitely many members, and how many. */
ARCGON_API arcgon_status arcgon_obtainable(const arcgon_set* s, const char* arc, int* out,
                                           int64_t* crossings);
/* Cluster variable of `arc` in the seed given by a connected triangulation. */
ARCGON_API arcgon_status arcgon_cluster_variable(const arcgon_set* s, const char* arc,
                                                 char** out);

/* Number of triangulations of the n-gon; `dot` (optional) receives the
 * exchange graph. */
ARCGON_API arcgon_status arcgon_enumerate(int64_t n, int64_t* count, char** dot);

ARCGON_API arcgon_status arcgon_render_svg(const arcgon_set* s, int64_t window, char** out);
ARCGON_API arcgon_status arcgon_examples(int table_only, char** out);
ARCGON_API arcgon_status arcgon_truncate(const arcgon_set* s, int64_t window, arcgon_set** out);

#ifdef __cplusplus
}
#endif

#endif /* ARCGON_ARCGON_H */
