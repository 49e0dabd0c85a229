#ifndef BRAUER_BRAUER_H
#define BRAUER_BRAUER_H

/* C interface to the engine. Handles are opaque; every call that can fail
 * returns a brauer_status and leaves a message on the context. Results are
 * JSON strings owned by the caller (release with brauer_string_free). */

#include <stddef.h>

#if defined(_WIN32)
#define BRAUER_API __declspec(dllexport)
#else
#define BRAUER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum brauer_status {
  BRAUER_OK = 0,
  BRAUER_INTERNAL_ERROR = 1,
  BRAUER_INPUT_ERROR = 2,
  BRAUER_CAP_EXCEEDED = 3,
  BRAUER_MISMATCH = 4 /* oracle disagreement or theorem violation */
} brauer_status;

typedef struct brauer_context brauer_context;
typedef struct brauer_group brauer_group;

BRAUER_API brauer_context* brauer_context_new(void);
BRAUER_API void brauer_context_free(brauer_context* ctx);
BRAUER_API void brauer_context_set_threads(brauer_context* ctx, unsigned threads);
/* which: "enumeration", "cohomology", "permutation" or "oracle". */
BRAUER_API brauer_status brauer_context_set_cap(brauer_context* ctx, const char* which, size_t value);
BRAUER_API const char* brauer_last_error(const brauer_context* ctx);
/* Symbolic name of the last error ("OrderCapExceeded", ...), "" if none. */
BRAUER_API const char* brauer_last_error_code(const brauer_context* ctx);

/* source: catalog name, Cayley-table JSON file, or permutation file. */
BRAUER_API brauer_status brauer_group_load(brauer_context* ctx, const char* source, brauer_group** out);
BRAUER_API brauer_status brauer_group_from_json(brauer_context* ctx, const char* json, brauer_group** out);
BRAUER_API void brauer_group_free(brauer_group* g);
BRAUER_API size_t brauer_group_order(const brauer_group* g);

BRAUER_API brauer_status brauer_group_info_json(brauer_context* ctx, const brauer_group* g, char** out);
BRAUER_API brauer_status brauer_group_table_json(brauer_context* ctx, const brauer_group* g, char** out);
/* With oracle_check set, both paths run and a disagreement returns
 * BRAUER_MISMATCH (the JSON is still produced). */
BRAUER_API brauer_status brauer_b0_json(brauer_context* ctx, const brauer_group* g, int oracle_check,
                                        char** out);
/* field: C, R, Q, Q2, Qp:<p> or custom:<path>. */
BRAUER_API brauer_status brauer_brnr_json(brauer_context* ctx, const brauer_group* g, const char* field,
                                          char** out);
BRAUER_API brauer_status brauer_real_report_json(brauer_context* ctx, const brauer_group* g, char** out);
BRAUER_API brauer_status brauer_simple_group_json(brauer_context* ctx, const brauer_group* g,
                                                  const char* field, char** out);
BRAUER_API brauer_status brauer_algebraic_bound_json(brauer_context* ctx, const brauer_group* g, long r,
                                                     char** out);
/* coeff: "q" for Q/Z or an integer r; kind: cyclic, bicyclic or abelian. */
BRAUER_API brauer_status brauer_sha2_json(brauer_context* ctx, const brauer_group* g, const char* coeff,
                                          const char* kind, char** out);
BRAUER_API brauer_status brauer_sha1_json(brauer_context* ctx, const brauer_group* g, const char* coeff,
                                          const char* kind, char** out);
BRAUER_API brauer_status brauer_h2_json(brauer_context* ctx, const brauer_group* g, const char* coeff,
                                        int with_cocycles, char** out);
/* grid: comma-separated "order<=N", "order>=N", "r=a,b,...", "q". */
BRAUER_API brauer_status brauer_sweep_json(brauer_context* ctx, const char* grid, char** out);
BRAUER_API brauer_status brauer_catalog_json(brauer_context* ctx, char** out);

BRAUER_API void brauer_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
