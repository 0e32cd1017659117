// Copyright 2026 The mapgen Authors.
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

#ifndef MAPGEN_MAPGEN_H
#define MAPGEN_MAPGEN_H

/*
 * C interface to mapgen. Objects are opaque handles released with their
 * *_free function. Strings returned through char** are released with
 * mapgen_string_free. Every call returns a status; on failure the message
 * is available from mapgen_last_error() on the same thread.
 *
 * Map text:   "n; (cycles of sigma); (pairs of alpha); root; colors|-; marks|-"
 *             with 1-based darts. The vertex map is "0; -; -; -; -; -".
 * Tree text:  "(" node ")" , "o" opening leaf, "c<iota>" closing leaf,
 *             "c*<k>" or "c*<k>x<mult>" closing leaf in a marked pair with
 *             the k-th opening leaf (0-based, root leaf first).
 */

#include <stddef.h>

#if defined(_WIN32)
#define MAPGEN_API __declspec(dllexport)
#else
#define MAPGEN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mapgen_status {
  MAPGEN_OK = 0,
  MAPGEN_E_STRUCTURAL = 1,
  MAPGEN_E_DOMAIN = 2,
  MAPGEN_E_RANGE = 3,
  MAPGEN_E_PRECONDITION = 4,
  MAPGEN_E_PARSE = 5,
  MAPGEN_E_INVARIANT = 6,
  MAPGEN_E_CAP = 7,
  MAPGEN_E_VERIFY = 8, /* a verification suite ran and failed */
  MAPGEN_E_ARG = 9,    /* null pointer or unknown option string */
  MAPGEN_E_INTERNAL = 10
} mapgen_status;

typedef enum mapgen_tree_family {
  MAPGEN_TREE_EULERIAN = 0,
  MAPGEN_TREE_BIPARTITE = 1
} mapgen_tree_family;

typedef struct mapgen_system mapgen_system;
typedef struct mapgen_series mapgen_series;
typedef struct mapgen_map mapgen_map;
typedef struct mapgen_map_list mapgen_map_list;
typedef struct mapgen_tree mapgen_tree;

MAPGEN_API const char* mapgen_last_error(void);
MAPGEN_API const char* mapgen_status_name(mapgen_status status);
MAPGEN_API const char* mapgen_version(void);
MAPGEN_API void mapgen_string_free(char* s);

/* ------------------------------------------------------------ series */

typedef struct mapgen_system_config {
  /* eulerian, eulerian-q, planar-r, bipartite, three-regular */
  const char* family;
  /* Eulerian families: "regular:2k", "symbolic:b" or "k=value,..." */
  const char* weights;
  int m; /* bipartite degree */
  int order;
  int i_max;
} mapgen_system_config;

MAPGEN_API mapgen_status mapgen_system_solve(const mapgen_system_config* cfg, mapgen_system** out);
MAPGEN_API void mapgen_system_free(mapgen_system* sys);

/* which: "r", "q", "s" (index i) or "m3" (i ignored) */
MAPGEN_API mapgen_status mapgen_system_series(const mapgen_system* sys, const char* which, int i,
                                              mapgen_series** out);
/* Face-colored T(N), or the fully colored series when fully != 0. N = 0
 * asks for T with symbolic N. */
MAPGEN_API mapgen_status mapgen_system_face_colored(const mapgen_system* sys, int N, int fully,
                                                    mapgen_series** out);
/* Smallest i_max that mapgen_system_face_colored needs for symbolic N. */
MAPGEN_API mapgen_status mapgen_face_colored_i_max(const char* family, int m, int order, int* out);

MAPGEN_API mapgen_status mapgen_riccati(int p, int order, mapgen_series** out);
MAPGEN_API mapgen_status mapgen_contfrac(int p, int depth, int order, mapgen_series** out);
/* family: m4, m3b, m3 or m6 */
MAPGEN_API mapgen_status mapgen_ode(const char* family, int order, mapgen_series** out);

MAPGEN_API mapgen_status mapgen_series_text(const mapgen_series* s, char** out);
MAPGEN_API mapgen_status mapgen_series_json(const mapgen_series* s, char** out);
MAPGEN_API mapgen_status mapgen_series_order(const mapgen_series* s, int* out);
/* Coefficient of x^n as a polynomial in the indeterminates, in text. */
MAPGEN_API mapgen_status mapgen_series_coefficient(const mapgen_series* s, int n, char** out);
MAPGEN_API void mapgen_series_free(mapgen_series* s);

/* --------------------------------------------------------------- maps */

typedef struct mapgen_map_info {
  int darts;
  int vertices;
  int edges;
  int faces;
  int genus;
  int marks;
} mapgen_map_info;

MAPGEN_API mapgen_status mapgen_map_parse(const char* text, mapgen_map** out);
MAPGEN_API mapgen_status mapgen_map_text(const mapgen_map* map, char** out);
MAPGEN_API mapgen_status mapgen_map_info_get(const mapgen_map* map, mapgen_map_info* out);
MAPGEN_API mapgen_status mapgen_map_canonical(const mapgen_map* map, mapgen_map** out);
MAPGEN_API mapgen_status mapgen_map_equal(const mapgen_map* a, const mapgen_map* b, int* out);
MAPGEN_API void mapgen_map_free(mapgen_map* map);

/* Minimal orientation for the outdegrees alpha (one per vertex, vertices
 * numbered by smallest dart). alpha == NULL uses the Eulerian half-degrees,
 * or the 1-orientation of degree m when m > 0. Marked maps get the
 * canonical marked orientation. The result reads
 * "tails (d ...); tree (e ...)" with 1-based darts and edges. */
MAPGEN_API mapgen_status mapgen_minimal_orientation(const mapgen_map* map, const int* alpha,
                                                    size_t n_alpha, int m, char** out);

/* ---------------------------------------------------------- enumeration */

typedef struct mapgen_enum_config {
  const char* family; /* eulerian, bipartite or general */
  int m;
  int max_edges;
  const int* profile; /* optional degree list */
  size_t profile_len;
  int genus; /* -1 for any */
  int marks; /* admissible marked maps with this many marks */
} mapgen_enum_config;

MAPGEN_API mapgen_status mapgen_enumerate(const mapgen_enum_config* cfg, mapgen_map_list** out);
MAPGEN_API size_t mapgen_map_list_size(const mapgen_map_list* list);
/* Borrowed handle, valid until the list is freed. */
MAPGEN_API const mapgen_map* mapgen_map_list_at(const mapgen_map_list* list, size_t k);
MAPGEN_API void mapgen_map_list_free(mapgen_map_list* list);
/* TSV count table with columns E, profile, genus, F, marks, value. */
MAPGEN_API mapgen_status mapgen_counts_tsv(const mapgen_map_list* list, char** out);

/* -------------------------------------------------------------- trees */

MAPGEN_API mapgen_status mapgen_tree_parse(const char* text, mapgen_tree** out);
MAPGEN_API mapgen_status mapgen_tree_text(const mapgen_tree* tree, char** out);
MAPGEN_API void mapgen_tree_free(mapgen_tree* tree);

MAPGEN_API mapgen_status mapgen_open(const mapgen_map* map, mapgen_tree_family family, int m,
                                     mapgen_tree** out);
MAPGEN_API mapgen_status mapgen_close(const mapgen_tree* tree, mapgen_tree_family family, int m,
                                      mapgen_map** out);
/* Genus-0 map with crossing vertices, its crossing count, and the map it
 * reduces to. Either map pointer may be NULL. */
MAPGEN_API mapgen_status mapgen_planar_close(const mapgen_tree* tree, mapgen_map** planar,
                                             mapgen_map** reduced, int* crossings);
MAPGEN_API mapgen_status mapgen_i_enrich_to_marked(const mapgen_tree* tree, int i, mapgen_tree** out);
MAPGEN_API mapgen_status mapgen_marked_to_i_enrich(const mapgen_tree* tree, int i, mapgen_tree** out);

/* ------------------------------------------------------------- verify */

typedef struct mapgen_verify_config {
  const char* family; /* eulerian, bipartite or three-regular */
  const char* weights;
  int m;
  int order;
  int i_max;
  int N;
  int max_edges;
  int max_black;
  int max_marks;
} mapgen_verify_config;

/* Fills cfg with the defaults used by mapgen_verify. */
MAPGEN_API void mapgen_verify_defaults(mapgen_verify_config* cfg);
/* suite: identities, roundtrip, face-colored, contfrac or all. The report
 * is written even when the suite fails, in which case the status is
 * MAPGEN_E_VERIFY. json != 0 selects JSON output; timings != 0 adds run
 * times to the text report. */
MAPGEN_API mapgen_status mapgen_verify(const char* suite, const mapgen_verify_config* cfg, int json,
                                       int timings, char** report);
/* Acceptance criterion 1..11, or 0 for all of them. */
MAPGEN_API mapgen_status mapgen_acceptance(int criterion, int json, int timings, char** report);

#ifdef __cplusplus
}
#endif

#endif /* MAPGEN_MAPGEN_H */
