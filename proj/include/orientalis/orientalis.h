/*
 * C API for the orientalis library.
 *
 * All objects are opaque handles. Functions return ORI_OK on success; on any
 * other status a thread-local message is available through ori_last_error().
 * Strings returned through char** are allocated by the library and must be
 * released with ori_string_free().
 */

#ifndef ORIENTALIS_H
#define ORIENTALIS_H

#include <stddef.h>

#if defined(_WIN32)
#  define ORI_API
#elif defined(ORI_BUILD_SHARED)
#  define ORI_API __attribute__((visibility("default")))
#else
#  define ORI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ori_polygraph ori_polygraph;

typedef enum ori_status {
    ORI_OK = 0,
    ORI_ERR_ARGUMENT = 1, /* bad parameter or out-of-range index */
    ORI_ERR_PARSE = 2,    /* cell/JSON text did not parse */
    ORI_ERR_CONTEXT = 3,  /* operation needs a strong Steiner presentation */
    ORI_ERR_INTERNAL = 4
} ori_status;

ORI_API const char* ori_version(void);

/* Message for the last failing call on this thread; empty string if none. */
ORI_API const char* ori_last_error(void);

ORI_API void ori_string_free(char* s);
ORI_API void ori_polygraph_free(ori_polygraph* p);

/* The n-th oriental, n >= 0. Cached process-wide; handles are cheap. */
ORI_API ori_status ori_oriental_create(int n, ori_polygraph** out);

/* Import/export of the polygraph JSON schema
 * {"dims": [[key,...],...], "boundaries": {key: {"src":..., "tgt":...}}}. */
ORI_API ori_status ori_polygraph_import_json(const char* json_text,
                                             ori_polygraph** out);
ORI_API ori_status ori_polygraph_to_json(const ori_polygraph* p, char** out);

/* One generator per line: "<0,1,2> : <0,2> -> <1,2>*0<0,1>". */
ORI_API ori_status ori_polygraph_to_text(const ori_polygraph* p, int unicode,
                                         char** out);

ORI_API int ori_polygraph_max_dim(const ori_polygraph* p);
/* Generator count in one dimension, or total for dim < 0. */
ORI_API ori_status ori_polygraph_generator_count(const ori_polygraph* p, int dim,
                                                 size_t* out);

/* Structural + linear validation report; sets *ok to 0/1. */
ORI_API ori_status ori_polygraph_validate(const ori_polygraph* p, char** report,
                                          int* ok);

/* Image of a cell of O_from under the cosimplicial functor of the
 * order-preserving map given by its comma-separated values phi(0),...,
 * phi(from). The result lives in O_to. */
ORI_API ori_status ori_cell_map(const char* phi_csv, int from_n, int to_n,
                                const char* cell_text, int unicode, char** out);

/* Steiner table of a cell over a polygraph (text rows or JSON). */
ORI_API ori_status ori_cell_eval(const ori_polygraph* p, const char* cell_text,
                                 int unicode, int as_json, char** out);

/* Expansion cone of a cell of O_n: "(<0,1>, <0,2>, <0,1,2>)" or the JSON
 * {"aux": [...], "principal": ..., "base": ...}. */
ORI_API ori_status ori_cell_cone(int n, const char* cell_text, int unicode,
                                 int as_json, char** out);

/* Simplicial chain complex of the n-simplex. */
ORI_API ori_status ori_simplex_adc(int n, char** out);

/* Verification pipeline for O_n. `only_csv` selects a comma-separated subset
 * of: atomicity, loop-free, lin-boundary, compare, monad-laws, simplicial,
 * oplax, chain-homotopy (NULL or "" runs all). n > 8 requires force != 0.
 * Sets *all_passed to 0/1; a failing check is not an error status. */
ORI_API ori_status ori_verify(int n, const char* only_csv, int force, int as_json,
                              char** report, int* all_passed);

/* The pipeline subset for an arbitrary polygraph: validate, atomicity,
 * loop-free, lin-boundary, and compare against the simplex complex of its
 * top dimension. `only_csv` as above. */
ORI_API ori_status ori_verify_polygraph(const ori_polygraph* p, const char* only_csv,
                                        int as_json, char** report, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* ORIENTALIS_H */
