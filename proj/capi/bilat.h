/* C interface to the bilattice toolkit.  All results are returned either as
 * plain ints or as heap-allocated strings the caller releases with
 * blt_string_free().  Functions return BLT_OK on success; on error,
 * blt_last_error() describes the most recent failure on this thread. */
#ifndef BILAT_C_H
#define BILAT_C_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BLT_OK = 0,
  BLT_ERR_NOT_A_POSET = 1,
  BLT_ERR_NOT_A_LATTICE = 2,
  BLT_ERR_NO_COMPLEMENT = 3,
  BLT_ERR_NO_TOP = 4,
  BLT_ERR_NOT_INVOLUTIVE = 5,
  BLT_ERR_NOT_ANTITONE = 6,
  BLT_ERR_NOT_INTERLACED = 7,
  BLT_ERR_NOT_COMMUTATIVE = 8,
  BLT_ERR_AXIOM_VIOLATION = 9,
  BLT_ERR_CARRIER_TOO_LARGE = 10,
  BLT_ERR_TOO_MANY_VARIABLES = 11,
  BLT_ERR_SIGNATURE_MISMATCH = 12,
  BLT_ERR_NOT_PRIME_BIFILTER = 13,
  BLT_ERR_NOT_DISTRIBUTIVE = 14,
  BLT_ERR_BAD_STEP = 15,
  BLT_ERR_SYNTAX = 16,
  BLT_ERR_DEPTH_EXCEEDED = 17,
  BLT_ERR_INVALID_INPUT = 18,
  BLT_ERR_OTHER = 99
} blt_status;

typedef struct blt_algebra blt_algebra;

const char* blt_version(void);
const char* blt_last_error(void);
void blt_string_free(char* s);

/* -------- algebras -------- */
blt_status blt_algebra_from_json(const char* json_text, blt_algebra** out);
blt_status blt_algebra_named(const char* name, blt_algebra** out);
void blt_algebra_free(blt_algebra* a);

/* variety: pre|int|dist|bil|conf|imp|rdm|ialg.  *holds is 1/0; *report gets a
 * JSON object with details. */
blt_status blt_algebra_check(const blt_algebra* a, const char* variety, int* holds,
                             char** report);
blt_status blt_algebra_decompose(const blt_algebra* a, char** json_out);
/* what: bifilters|congruences */
blt_status blt_algebra_enumerate(const blt_algebra* a, const char* what, char** json_out);
/* format: json|tables */
blt_status blt_algebra_emit(const blt_algebra* a, const char* format, char** out);

/* -------- logic -------- */
/* logic: lb|lbs; method: semantic|nf (nf only for lb).  *valid is 1/0. */
blt_status blt_decide(const char* logic, const char* method, const char* sequent_text,
                      int* valid);
blt_status blt_normal_form(const char* formula_text, char** out);
/* *proved is 1/0; on success *proof_json gets the proof tree. */
blt_status blt_prove(const char* sequent_text, int depth, int* proved, char** proof_json);
/* calculus: hlb|hlbs|glb; file content as described in the README.  *ok is 1/0,
 * *diag carries a failure description when *ok is 0. */
blt_status blt_check_proof(const char* calculus, const char* proof_json, int* ok,
                           char** diag);
/* dir: tau|rho; system: glb|lbs */
blt_status blt_translate(const char* dir, const char* system, const char* input,
                         char** out);

#ifdef __cplusplus
}
#endif

#endif /* BILAT_C_H */
