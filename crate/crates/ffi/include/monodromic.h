#ifndef MONODROMIC_H
#define MONODROMIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Algebra tags for [`mono_operator_parse`].
typedef enum MonoAlgebra {
  // `s`, `T`, `Ti`.
  MONO_ALGEBRA_SHIFT = 0,
  // Polynomial Weyl algebra; the rank argument gives the number of variables.
  MONO_ALGEBRA_WEYL = 1,
  // `x` invertible, rank 1.
  MONO_ALGEBRA_LAURENT = 2,
} MonoAlgebra;

// Integer fields of [`MonoParams`].
typedef enum MonoParam {
  MONO_PARAM_Q = 0,
  MONO_PARAM_D = 1,
  MONO_PARAM_N = 2,
  MONO_PARAM_WINDOW = 3,
  MONO_PARAM_ELL = 4,
  MONO_PARAM_R = 5,
  MONO_PARAM_NPRIME = 6,
  MONO_PARAM_SEED = 7,
  MONO_PARAM_SAMPLES = 8,
  MONO_PARAM_DEGREE = 9,
} MonoParam;

// Result codes. `Ok` is zero; everything else is an error.
typedef enum MonoStatus {
  MONO_STATUS_OK = 0,
  MONO_STATUS_NULL_POINTER = 1,
  MONO_STATUS_INVALID_UTF8 = 2,
  MONO_STATUS_SYNTAX = 3,
  MONO_STATUS_UNKNOWN_ATOM = 4,
  MONO_STATUS_INVALID_PARAMETER = 5,
  MONO_STATUS_UNKNOWN_CHECK = 6,
  MONO_STATUS_WRONG_ALGEBRA = 7,
  MONO_STATUS_COMPUTATION_FAILED = 8,
  MONO_STATUS_PANIC = 9,
} MonoStatus;

// Verdict of a check, matching the command-line exit codes.
typedef enum MonoVerdict {
  MONO_VERDICT_PASS = 0,
  MONO_VERDICT_FAIL = 1,
  MONO_VERDICT_DIAGNOSTIC = 2,
} MonoVerdict;

// Opaque operator handle.
typedef struct MonoOperator MonoOperator;

// Opaque parameter set for [`mono_check_run`]. Unset fields take each check's defaults.
typedef struct MonoParams MonoParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failing call on this thread, or null. Valid until the
// next call into this library on the same thread; do not free.
const char *mono_last_error(void);

// Releases a string returned by this library.
//
// # Safety
// `s` is null or was returned by this library and not yet freed.
void mono_string_free(char *s);

// Parses and reduces `text` in the given algebra. `rank` is read only for `Weyl`.
//
// # Safety
// `text` is a nul-terminated string; `out` is valid for writes.
enum MonoStatus mono_operator_parse(const char *text,
                                    enum MonoAlgebra algebra,
                                    size_t rank,
                                    struct MonoOperator **out);

// Releases an operator handle.
//
// # Safety
// `op` is null or a live handle from this library.
void mono_operator_free(struct MonoOperator *op);

// Normal form as text; free with [`mono_string_free`]. Null if `op` is null.
//
// # Safety
// `op` is null or a live handle.
char *mono_operator_to_string(const struct MonoOperator *op);

// Structural equality of normal forms. False if either handle is null.
//
// # Safety
// Each argument is null or a live handle.
bool mono_operator_equal(const struct MonoOperator *a, const struct MonoOperator *b);

// Mellin image of a Laurent-Weyl operator, as a new shift-algebra handle.
//
// # Safety
// `op` is a live handle; `out` is valid for writes.
enum MonoStatus mono_operator_mellin(const struct MonoOperator *op, struct MonoOperator **out);

// Fourier image `x_i -> -d_i`, `d_i -> x_i` of a Weyl operator. With
// `normalize` the leading coefficient is scaled to 1.
//
// # Safety
// `op` is a live handle; `out` is valid for writes.
enum MonoStatus mono_operator_fourier(const struct MonoOperator *op,
                                      bool normalize,
                                      struct MonoOperator **out);

// A parameter set with every field unset.
struct MonoParams *mono_params_new(void);

// Releases a parameter set.
//
// # Safety
// `p` is null or a live handle.
void mono_params_free(struct MonoParams *p);

// Sets one integer field. Values outside the field's range are refused.
//
// # Safety
// `p` is null or a live handle.
enum MonoStatus mono_params_set(struct MonoParams *p, enum MonoParam field, int64_t value);

// Sets the exponent `chi` from a rational literal such as `"1/2"`.
//
// # Safety
// `p` is a live handle; `chi` is a nul-terminated string.
enum MonoStatus mono_params_set_chi(struct MonoParams *p, const char *chi);

// Runs the named check. On success `*verdict` is set and `*report_json`
// receives the JSON report (free with [`mono_string_free`]). `params` may be
// null for all defaults; `report_json` may be null when only the verdict is wanted.
//
// # Safety
// `name` is a nul-terminated string; `params` is null or a live handle;
// `verdict` is valid for writes; `report_json` is null or valid for writes.
enum MonoStatus mono_check_run(const char *name,
                               const struct MonoParams *params,
                               enum MonoVerdict *verdict,
                               char **report_json);

// Number of registered checks.
size_t mono_check_count(void);

// Name of check `index` (static storage, do not free), or null when out of range.
const char *mono_check_name(size_t index);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MONODROMIC_H */
