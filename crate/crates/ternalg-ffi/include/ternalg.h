/* C interface for the ternalg engine.
 *
 * Maintained by hand to match crates/ternalg-ffi/src/lib.rs; keep the
 * two files in sync when the ABI changes.
 *
 * Conventions:
 *   - algebras are opaque handles created from JSON descriptors and
 *     released with ternalg_algebra_free;
 *   - structured results are JSON strings owned by the caller, released
 *     with ternalg_string_free;
 *   - every fallible call returns a ternalg_status code and only writes
 *     its out-parameters on TERNALG_OK.
 */

#ifndef TERNALG_H
#define TERNALG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ternalg_status {
  TERNALG_OK = 0,
  TERNALG_ERR_NULL = 1,   /* required pointer argument was null */
  TERNALG_ERR_UTF8 = 2,   /* string argument was not valid UTF-8 */
  TERNALG_ERR_PARSE = 3,  /* JSON / descriptor / enum name parse failure */
  TERNALG_ERR_DOMAIN = 4, /* operation not defined for this input */
  TERNALG_ERR_PANIC = 5,  /* internal failure; out-parameters untouched */
} ternalg_status;

typedef struct TernalgAlgebra TernalgAlgebra;

/* Build an algebra from a JSON descriptor, e.g.
 *   {"kind":"cubic","n":2,"pairing":"A","conj_mid":false}
 *   {"kind":"vector","n":3,"form":"alpha"}
 *   {"kind":"custom","dim":2,"mode":"trilinear","product":[...]}
 */
int ternalg_algebra_from_json(const char *json, TernalgAlgebra **out);

void ternalg_algebra_free(TernalgAlgebra *h);

/* Complex dimension, or -1 for a null handle. */
int ternalg_algebra_dim(const TernalgAlgebra *h);

/* Run one law check; the report is returned as JSON:
 *   {"law":...,"verdict":"holds"|"fails","mode":...,"tuples_checked":...,
 *    "counterexample":{...}?}
 * law: "omega-symmetry" | "ga15-identity" | "assoc-1" | "assoc-2"
 * bracket: "omega" | "conjugate" | "reduced" (ignored for assoc-*)
 * mode: "exact" | "float"
 */
int ternalg_check_law(const TernalgAlgebra *h, const char *law,
                      const char *bracket, const char *mode,
                      char **out_json);

/* Dump structure constants of a bracket as a "custom" JSON descriptor
 * (round-trips through ternalg_algebra_from_json). Conjugate-mid
 * algebras dump over the realified basis. */
int ternalg_structure_constants(const TernalgAlgebra *h, const char *bracket,
                                char **out_json);

/* Check the quadratic five-point system on a constants dump. */
int ternalg_check_constants_system(const char *constants_json,
                                   const char *mode, char **out_json);

void ternalg_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* TERNALG_H */
