/* SPDX-FileCopyrightText: (c) 2026 The vgbs-jsj Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface of libvgbs. Graphs are opaque handles; every call returns a
 * status code and, on failure, leaves a message readable through
 * vgbs_last_error() on the calling thread. Strings handed out by the library
 * are released with vgbs_string_free(). */

#ifndef VGBS_H
#define VGBS_H

#include <stddef.h>
#include <stdint.h>

#ifndef VGBS_API
#define VGBS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vgbs_graph vgbs_graph;

typedef enum vgbs_status {
  VGBS_OK = 0,
  VGBS_ERR_INVALID_ARGUMENT,
  VGBS_ERR_PARSE,
  VGBS_ERR_INVALID_GRAPH,
  VGBS_ERR_UNKNOWN_ID,
  VGBS_ERR_NOT_CONTAINED,
  VGBS_ERR_NOT_CORANK_ONE,
  VGBS_ERR_NOT_SATURATED,
  VGBS_ERR_NOT_REPRESENTABLE,
  VGBS_ERR_NOT_UNIMODULAR,
  VGBS_ERR_DIMENSION_MISMATCH,
  VGBS_ERR_NOT_ONE_ONE_LOOP,
  VGBS_ERR_NOT_TWO_TWO_EDGE,
  VGBS_ERR_NOT_INDEX_TWO,
  VGBS_ERR_NOT_REDUCED,
  VGBS_ERR_UNSUPPORTED_VERTEX_KIND,
  VGBS_ERR_WITNESS_INVALID,
  VGBS_ERR_NO_DEFICIENCY_ONE,
  VGBS_ERR_RANK_TOO_SMALL,
  VGBS_ERR_PARAM,
  VGBS_ERR_INTERNAL
} vgbs_status;

/* Flags for vgbs_jsj_compute. */
#define VGBS_JSJ_REDUCE_OUTPUT 0x1u /* contract the result to a reduced graph */
#define VGBS_JSJ_UNCHECKED 0x2u     /* skip per-move abelianization checks */

typedef struct vgbs_gen_params {
  uint64_t seed;
  size_t max_rank;
  size_t n_vertices;
  size_t n_edges;
  long max_entry;
  unsigned weight_generic;
  unsigned weight_loop;
  unsigned weight_one_one;
  unsigned weight_two_two;
  unsigned align_percent;
} vgbs_gen_params;

VGBS_API const char* vgbs_version(void);
VGBS_API const char* vgbs_status_name(vgbs_status status);
VGBS_API const char* vgbs_last_error(void);
VGBS_API void vgbs_string_free(char* s);

VGBS_API vgbs_status vgbs_graph_from_json(const char* text, vgbs_graph** out);
VGBS_API void vgbs_graph_free(vgbs_graph* g);
VGBS_API vgbs_status vgbs_graph_to_json(const vgbs_graph* g, char** out);
VGBS_API vgbs_status vgbs_graph_to_dot(const vgbs_graph* g, char** out);
VGBS_API size_t vgbs_graph_vertex_count(const vgbs_graph* g);
VGBS_API size_t vgbs_graph_edge_count(const vgbs_graph* g);

/* *valid is set to 1 or 0; *diagnostics (optional) receives a JSON array of
 * {"location", "message"} objects. */
VGBS_API vgbs_status vgbs_graph_validate(const vgbs_graph* g, int* valid, char** diagnostics);

/* JSON {"free_rank": n, "torsion": [...]} */
VGBS_API vgbs_status vgbs_graph_abelianization(const vgbs_graph* g, char** out);

/* *records (optional) receives the JSON list of contractions. */
VGBS_API vgbs_status vgbs_graph_reduce(const vgbs_graph* g, vgbs_graph** out, char** records);

/* *report (optional) receives the JSON report. */
VGBS_API vgbs_status vgbs_jsj_compute(const vgbs_graph* g, unsigned flags, vgbs_graph** out,
                                      char** report);

VGBS_API vgbs_status vgbs_bounded_rank(const vgbs_graph* g, size_t bound, vgbs_graph** out);

/* matrix: JSON array of rows. *out receives {"tag", ...}. */
VGBS_API vgbs_status vgbs_classify_matrix(const char* matrix, char** out);

VGBS_API void vgbs_gen_params_default(vgbs_gen_params* p);
VGBS_API vgbs_status vgbs_generate(const vgbs_gen_params* p, vgbs_graph** out);

#ifdef __cplusplus
}
#endif

#endif /* VGBS_H */
