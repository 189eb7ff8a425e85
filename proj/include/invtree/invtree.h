#ifndef INVTREE_INVTREE_H
#define INVTREE_INVTREE_H

/* C interface to the invtree library. Every call takes a context; results
 * are written to the context's output buffer, which stays valid until the
 * next call on the same context. A context must not be used by two threads
 * at once. */

#include <stddef.h>

#if defined(INVTREE_BUILDING_LIBRARY)
#define INVTREE_API __attribute__((visibility("default")))
#else
#define INVTREE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct invtree_context invtree_context;

typedef enum invtree_status {
  INVTREE_OK = 0,
  INVTREE_INVALID_ARGUMENT = 1,
  INVTREE_PARSE_ERROR = 2,
  INVTREE_LIMIT_EXCEEDED = 3,
  INVTREE_PRECONDITION_FAILED = 4,
  INVTREE_CHECK_FAILED = 5, /* a verification ran and found a failure; output holds the report */
  INVTREE_INTERNAL_ERROR = 6,
  INVTREE_OUT_OF_MEMORY = 7
} invtree_status;

typedef enum invtree_format {
  INVTREE_FORMAT_TEXT = 0,
  INVTREE_FORMAT_JSON = 1,
  INVTREE_FORMAT_CSV = 2
} invtree_format;

typedef void (*invtree_progress_fn)(const char* line, void* user);

INVTREE_API const char* invtree_version(void);
INVTREE_API const char* invtree_status_name(invtree_status status);

INVTREE_API invtree_status invtree_context_create(invtree_context** out);
INVTREE_API void invtree_context_destroy(invtree_context* ctx);

/* Message of the last failed call, "" after a success. */
INVTREE_API const char* invtree_last_error(const invtree_context* ctx);
/* Output of the last call (NUL terminated) and its length in bytes. */
INVTREE_API const char* invtree_output(const invtree_context* ctx);
INVTREE_API size_t invtree_output_size(const invtree_context* ctx);

/* Worker threads for verify and conjecture (default 1). */
INVTREE_API invtree_status invtree_set_jobs(invtree_context* ctx, int jobs);
/* Receives one line per finished check; called under a lock from worker
 * threads. Pass NULL to disable. */
INVTREE_API void invtree_set_progress(invtree_context* ctx, invtree_progress_fn fn, void* user);
/* Include elapsed times in verification output (off by default so output
 * is reproducible). */
INVTREE_API void invtree_set_timing(invtree_context* ctx, int enabled);

/* Class specs: "geq,dash,geq", "avoid:110,210", "perm:1-23-4",
 * "classical:123,132", "path:steady", "tree". */
INVTREE_API invtree_status invtree_count(invtree_context* ctx, const char* class_spec, int n);
/* Canonical texts of the members of size n, one per line, sorted. */
INVTREE_API invtree_status invtree_enumerate(invtree_context* ctx, const char* class_spec, int n);
/* kind: invseq, perm, dyck, vmdyck, steady, vmsteady, tree. Output is "ok"
 * or one "invariant position detail" line per violation; a parseable but
 * invalid object returns INVTREE_CHECK_FAILED. */
INVTREE_API invtree_status invtree_validate(invtree_context* ctx, const char* kind, const char* text);

/* Level counts 1..depth of a succession rule (cat, cat2, i-geq3, bax, semi,
 * pcat, p1234, steady). */
INVTREE_API invtree_status invtree_levels(invtree_context* ctx, const char* rule, int depth, invtree_format format);
/* Label distribution per level 1..depth. */
INVTREE_API invtree_status invtree_labels(invtree_context* ctx, const char* rule, int depth, invtree_format format);
/* Rows 0..n of c(n,k). */
INVTREE_API invtree_status invtree_triangle(invtree_context* ctx, int n, invtree_format format);
/* Children of an object in a growth family, each with its label. */
INVTREE_API invtree_status invtree_grow(invtree_context* ctx, const char* family, const char* input, invtree_format format);
/* Applies a named bijection (tinv, cat-perm, phi-star, ...). */
INVTREE_API invtree_status invtree_map(invtree_context* ctx, const char* name, const char* input);

/* suite: characterizations, growths, bijections, series, all. */
INVTREE_API invtree_status invtree_verify(invtree_context* ctx, const char* suite, invtree_format format);
/* RTL-minima evidence for AV(23-1-4) up to n_max. Disagreement is reported
 * in the output but does not make the call fail. */
INVTREE_API invtree_status invtree_conjecture(invtree_context* ctx, int n_max, invtree_format format);
/* name: a reference sequence (catalan, a108307, baxter, semibaxter, pcat),
 * e3, triangle, kernel-a11, kernel-w, residual. */
INVTREE_API invtree_status invtree_series(invtree_context* ctx, const char* name, int n, invtree_format format);

#ifdef __cplusplus
}
#endif

#endif
