#ifndef INVOL2_H
#define INVOL2_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. The first three agree with the command-line exit codes.
typedef enum Invol2Status {
  INVOL2_STATUS_OK = 0,
  INVOL2_STATUS_VERIFICATION = 1,
  INVOL2_STATUS_PARSE = 2,
  INVOL2_STATUS_DEGREE_OVERFLOW = 3,
  INVOL2_STATUS_NULL_ARGUMENT = 4,
  INVOL2_STATUS_INVALID_UTF8 = 5,
  // The library rejected the input on mathematical grounds, for example a
  // symplectic factor or a zero slot.
  INVOL2_STATUS_REJECTED = 6,
  INVOL2_STATUS_PANIC = 7,
} Invol2Status;

// A tensor product of quaternion and (M_2, t) factors with its involution.
typedef struct Invol2Algebra Invol2Algebra;

// A rational function field GF(2)(x_1, ..., x_m).
typedef struct Invol2Field Invol2Field;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string.
const char *invol2_version(void);

// Message of the last failure on this thread. Valid until the next call
// into the library on this thread; never null.
const char *invol2_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` is null or was returned by this library and not yet freed.
void invol2_string_free(char *s);

// Creates the field GF(2)(vars) from comma-separated variable names.
// `degree_budget` 0 selects the default budget.
//
// # Safety
// `vars` is a nul-terminated string and `out` a writable pointer.
enum Invol2Status invol2_field_new(const char *vars,
                                   uint32_t degree_budget,
                                   struct Invol2Field **out);

// # Safety
// `f` is null or a handle from `invol2_field_new` not yet freed.
void invol2_field_free(struct Invol2Field *f);

// Builds the tensor product of semicolon-separated factors, each `m2t` or
// `[alpha,beta)` with the orthogonal involution.
//
// # Safety
// `field` is a live handle, `factors` a nul-terminated string and `out` a
// writable pointer.
enum Invol2Status invol2_algebra_new(const struct Invol2Field *field,
                                     const char *factors,
                                     struct Invol2Algebra **out);

// # Safety
// `a` is null or a handle from `invol2_algebra_new` not yet freed.
void invol2_algebra_free(struct Invol2Algebra *a);

// Dimension 4^n of the algebra; 0 for a null handle.
//
// # Safety
// `a` is null or a live handle.
size_t invol2_algebra_dim(const struct Invol2Algebra *a);

// i-invariant of the algebra's Pfister form.
//
// # Safety
// `a` is a live handle and `out` a writable pointer.
enum Invol2Status invol2_i_invariant(const struct Invol2Algebra *a, uint32_t *out);

// Decides whether alpha = x^2 for a nonzero x in F[v_1..v_n]. On success
// `*represented` is set, and `*witness` receives the rendered x (or null
// when not represented), to be released with `invol2_string_free`.
//
// # Safety
// `a` is a live handle, `alpha` a nul-terminated string, `represented`
// writable and `witness` null or writable.
enum Invol2Status invol2_represents(const struct Invol2Algebra *a,
                                    const char *alpha,
                                    bool *represented,
                                    char **witness);

// Runs a scenario given as JSON and returns its certificate as JSON. When
// `use_seed` is false the scenario's own seed (or the default) is used.
// Unmet expectations still produce a certificate and return
// `INVOL2_STATUS_VERIFICATION`.
//
// # Safety
// `scenario_json` is a nul-terminated string and `certificate` writable.
enum Invol2Status invol2_run_scenario(const char *scenario_json,
                                      bool use_seed,
                                      uint64_t seed,
                                      char **certificate);

// Re-verifies every witness in a certificate. `*failures` receives the
// number of witnesses that did not re-verify; the status is
// `INVOL2_STATUS_VERIFICATION` when it is nonzero.
//
// # Safety
// `certificate_json` is a nul-terminated string and `failures` writable.
enum Invol2Status invol2_recheck(const char *certificate_json, size_t *failures);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INVOL2_H */
