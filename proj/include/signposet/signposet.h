/* Copyright 2026 The signposet Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the signposet engine. Every function returns an sp_status;
 * on failure sp_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings handed out through char** are
 * heap-allocated and must be released with sp_string_free.
 */
#ifndef SIGNPOSET_H
#define SIGNPOSET_H

#include <stddef.h>

#if defined(SIGNPOSET_BUILDING)
#define SP_API __attribute__((visibility("default")))
#else
#define SP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sp_poset sp_poset;

typedef enum {
  SP_OK = 0,
  SP_VIOLATION = 1,        /* the check ran and found a counterexample */
  SP_INVALID_ARGUMENT = 2,
  SP_GUARD = 3,            /* request exceeds an exhaustive-scale limit */
  SP_INTERNAL = 4
} sp_status;

typedef enum { SP_FAMILY_R = 0, SP_FAMILY_P = 1 } sp_family;

typedef enum { SP_FORMAT_JSON = 0, SP_FORMAT_CSV = 1, SP_FORMAT_DOT = 2, SP_FORMAT_TEXT = 3 } sp_format;

typedef struct {
  int force; /* nonzero lifts the size guards */
  int jobs;  /* worker threads, at least 1 */
} sp_options;

SP_API const char* sp_version(void);
SP_API const char* sp_last_error(void);
SP_API void sp_string_free(char* s);

SP_API sp_status sp_poset_build(int n, int l, sp_family family, sp_poset** out);
/* Adjoins a bottom and a top element. */
SP_API sp_status sp_poset_bounded(const sp_poset* p, sp_poset** out);
SP_API void sp_poset_free(sp_poset* p);
SP_API sp_status sp_poset_size(const sp_poset* p, size_t* elements, size_t* cover_edges);
/* JSON or DOT. */
SP_API sp_status sp_poset_export(const sp_poset* p, sp_format format, char** out);

/* Verification suites. SP_OK on pass, SP_VIOLATION on failure; the report
 * (JSON or text) is produced in both cases. */
SP_API sp_status sp_verify_el(int n, int l, const sp_options* opts, sp_format format, char** report);
SP_API sp_status sp_verify_flow(int n, int l, sp_family family, sp_format format, char** report);
SP_API sp_status sp_verify_lattice(int n, int l, sp_family family, const sp_options* opts,
                                   sp_format format, char** report);
SP_API sp_status sp_verify_atoms(int n, int l, const sp_options* opts, sp_format format, char** report);

/* Edge list of the normalized flow with exact "p/q" weights. */
SP_API sp_status sp_flow_export(int n, int l, sp_family family, char** out);

/* kind: "f", "h", "flagf", "flagh" or "whitney". SP_VIOLATION when the
 * enumerated and closed columns disagree. */
SP_API sp_status sp_vectors(int n, int l, const char* kind, sp_family family, sp_format format,
                            const sp_options* opts, char** out);

/* Sperner sweep over P_{n,l}, 0 <= l < n <= n_max. SP_VIOLATION when some
 * instance is not Sperner. */
SP_API sp_status sp_sweep(int n_max, sp_format format, const sp_options* opts, char** out);

/* Maximal chains of the bounded R_{n,l} with labels and descents. */
SP_API sp_status sp_chains(int n, int l, sp_format format, const sp_options* opts, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SIGNPOSET_H */
