#ifndef POWERCLOSE_POWERCLOSE_H
#define POWERCLOSE_POWERCLOSE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef POWERCLOSE_BUILDING
#    define PC_API __declspec(dllexport)
#  else
#    define PC_API __declspec(dllimport)
#  endif
#else
#  define PC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the library's internal error categories one to one. */
typedef enum pc_status {
  PC_OK = 0,
  PC_ERR_EMPTY_GENERATORS = 1,
  PC_ERR_DIMENSION_MISMATCH = 2,
  PC_ERR_NEGATIVE_EXPONENT = 3,
  PC_ERR_ZERO_MULTI_INDEX = 4,
  PC_ERR_NOT_M_PRIMARY = 5,
  PC_ERR_OVERFLOW = 6,
  PC_ERR_WRONG_TOTAL_DEGREE = 7,
  PC_ERR_VALIDITY_GATE = 8,
  PC_ERR_SINGULAR_SYSTEM = 9,
  PC_ERR_VALIDATION_FAILURE = 10,
  PC_ERR_NOT_CONTAINED = 11,
  PC_ERR_NONE_FOUND = 12,
  PC_ERR_SEARCH_EXHAUSTED = 13,
  PC_ERR_PARSE = 14,
  PC_ERR_VALIDATION = 15,
  PC_ERR_INVALID_ARGUMENT = 16,
  PC_ERR_IO = 17,
  PC_ERR_INTERNAL = 18
} pc_status;

typedef enum pc_filtration { PC_FILTRATION_ADIC = 0, PC_FILTRATION_CLOSURE = 1 } pc_filtration;

typedef struct pc_session pc_session;
typedef struct pc_family pc_family;
typedef struct pc_candidate pc_candidate;

PC_API const char* pc_version(void);
PC_API const char* pc_status_name(pc_status status);
/* Message of the last failed call on this thread; never NULL. */
PC_API const char* pc_last_error_message(void);
/* Frees any string returned through a char** out parameter. */
PC_API void pc_string_free(char* s);

/* "sha256:<hex>" of arbitrary bytes. */
PC_API pc_status pc_digest(const char* data, size_t size, char** out);

/* A session carries the optional result cache and memoized closures. */
PC_API pc_status pc_session_create(pc_session** out);
PC_API void pc_session_destroy(pc_session* session);
/* NULL or "" disables caching. */
PC_API pc_status pc_session_set_cache_dir(pc_session* session, const char* directory);

/* Parses family-file text. When warnings is non-NULL it receives a JSON array of strings. */
PC_API pc_status pc_family_parse(const char* text, int require_m_primary, pc_family** out, char** warnings);
PC_API void pc_family_destroy(pc_family* family);
PC_API pc_status pc_family_serialize(const pc_family* family, char** out);
/* "sha256:<hex>" of the canonical text. */
PC_API pc_status pc_family_digest(const pc_family* family, char** out);
/* JSON: dimension, ideal names, variables, filtration, generators. */
PC_API pc_status pc_family_describe(const pc_family* family, char** out);
PC_API size_t pc_family_dimension(const pc_family* family);
PC_API size_t pc_family_size(const pc_family* family);
PC_API pc_status pc_family_set_filtration(pc_family* family, pc_filtration filtration);

/* File body ("Name: poly, ...") or inline "{a, b; c}". Validated against the family. */
PC_API pc_status pc_candidate_parse(const pc_family* family, const char* text, pc_candidate** out);
PC_API void pc_candidate_destroy(pc_candidate* candidate);
PC_API pc_status pc_candidate_serialize(const pc_candidate* candidate, char** out);

/*
 * Operations. Each writes a JSON object to *out. The object has a boolean
 * "positive" field telling whether the verdict is affirmative. A status of
 * PC_ERR_NONE_FOUND, PC_ERR_SEARCH_EXHAUSTED or PC_ERR_VALIDATION_FAILURE still
 * fills *out with the partial result; every other error leaves *out NULL.
 * Multi-indices are arrays of length pc_family_size.
 */
PC_API pc_status pc_closure(pc_session* session, const pc_family* family, char** out);
PC_API pc_status pc_is_complete(pc_session* session, const pc_family* family, char** out);
PC_API pc_status pc_colength(pc_session* session, const pc_family* family, char** out);
PC_API pc_status pc_hilbert(pc_session* session, const pc_family* family, const int64_t* lo, const int64_t* hi, char** out);
PC_API pc_status pc_poly_fit(pc_session* session, const pc_family* family, const int64_t* window, char** out);
/* alpha == NULL computes every alpha with |alpha| = d. */
PC_API pc_status pc_mixed_mult(pc_session* session, const pc_family* family, const int64_t* alpha, int override_gate, char** out);
PC_API pc_status pc_check_p_eq_h(pc_session* session, const pc_family* family, const int64_t* window, const int64_t* bound, char** out);
PC_API pc_status pc_jr_verify(pc_session* session, const pc_family* family, const pc_candidate* candidate, const int64_t* lo,
                              const int64_t* hi, char** out);
PC_API pc_status pc_jr_number(pc_session* session, const pc_family* family, const pc_candidate* candidate, int64_t bound, char** out);
PC_API pc_status pc_jr_search(pc_session* session, const pc_family* family, const int64_t* type, const int64_t* grid, uint64_t seed,
                              int64_t coeff_bound, uint64_t max_draws, char** out);
PC_API pc_status pc_certify(pc_session* session, const pc_family* family, char** out);
PC_API pc_status pc_audit(pc_session* session, const pc_family* family, int64_t bound, char** out);
/* Result carries the found family as family-file text under "family". */
PC_API pc_status pc_search_incomplete(pc_session* session, size_t dimension, size_t ideals, int64_t exponent_bound, uint64_t seed,
                                      uint64_t budget, char** out);

/*
 * Independent re-check of a completeness witness: x^monomial against the
 * product I^n. Sets *in_closure from an exact LP certificate and *in_product
 * from divisibility.
 */
PC_API pc_status pc_check_witness(const pc_family* family, const int64_t* n, const int64_t* monomial, int* in_closure, int* in_product);

#ifdef __cplusplus
}
#endif

#endif
