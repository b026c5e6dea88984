/* SPDX-License-Identifier: Apache-2.0 */
#ifndef TROPEXT_TROPEXT_H
#define TROPEXT_TROPEXT_H

#include <stddef.h>

#if defined(TROPEXT_BUILDING)
#define TROPEXT_API __attribute__((visibility("default")))
#else
#define TROPEXT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tropext_status {
  TROPEXT_OK = 0,
  TROPEXT_ERR_PARSE = 1,       /* malformed literal, polynomial or hyperfield key */
  TROPEXT_ERR_DOMAIN = 2,      /* operation undefined for these operands */
  TROPEXT_ERR_PRECISION = 3,   /* truncated series do not determine the answer */
  TROPEXT_ERR_UNSUPPORTED = 4, /* instance outside what the exact solvers handle */
  TROPEXT_ERR_ARGUMENT = 5,    /* null pointer or malformed request */
  TROPEXT_ERR_INTERNAL = 6,
  TROPEXT_CHECK_FAILED = 7     /* tropext_run completed but a check did not pass */
} tropext_status;

typedef struct tropext_hyperfield tropext_hyperfield;
typedef struct tropext_poly tropext_poly;

TROPEXT_API const char* tropext_version(void);

/* Message of the last failed call on this thread; empty after a success. */
TROPEXT_API const char* tropext_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
TROPEXT_API void tropext_string_free(char* s);

/* Keys such as "S", "GF7/{1,2,4}", "T", "Q⋊Q". */
TROPEXT_API tropext_status tropext_hyperfield_new(const char* key, tropext_hyperfield** out);
TROPEXT_API void tropext_hyperfield_free(tropext_hyperfield* h);
TROPEXT_API tropext_status tropext_hyperfield_key(const tropext_hyperfield* h, char** out);
TROPEXT_API tropext_status tropext_hyperfield_is_stringent(const tropext_hyperfield* h, int* out);

/* Canonical form of an element literal. */
TROPEXT_API tropext_status tropext_elem_normalize(const tropext_hyperfield* h, const char* text, char** out);
/* Hypersum of two element literals, as printed by the library. */
TROPEXT_API tropext_status tropext_elem_add(const tropext_hyperfield* h, const char* a, const char* b, char** out);

/* nvars = 0 infers the variable count. */
TROPEXT_API tropext_status tropext_poly_parse(const tropext_hyperfield* h, const char* text, size_t nvars,
                                              tropext_poly** out);
TROPEXT_API void tropext_poly_free(tropext_poly* p);
TROPEXT_API tropext_status tropext_poly_to_string(const tropext_poly* p, char** out);
TROPEXT_API tropext_status tropext_poly_nvars(const tropext_poly* p, size_t* out);
/* *out = 1 when zero lies in p(point). */
TROPEXT_API tropext_status tropext_poly_is_root(const tropext_poly* p, const char* const* point, size_t n, int* out);
/* JSON array of {"root", "multiplicity", "cell"?} for a univariate polynomial. */
TROPEXT_API tropext_status tropext_poly_roots_json(const tropext_poly* p, char** out);

/* Batch interface: a request object as documented in schema/request.schema.json. On success or
 * TROPEXT_CHECK_FAILED, *out holds the response; on other errors it holds an error object. */
TROPEXT_API tropext_status tropext_run(const char* request_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
