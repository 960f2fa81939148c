#ifndef JINV_JINV_H
#define JINV_JINV_H

/* C interface to the j-invariant library: evaluation of j(tau), inversion
 * of j through the hypergeometric quotients at i and rho, series
 * coefficients and the worked reproduction runs.
 *
 * Every numeric value crosses the boundary as a round-half-even decimal
 * string formatted at the context's digit count. Result handles own their
 * strings; pointers stay valid until the handle is destroyed. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(JINV_BUILDING)
#    define JINV_API __declspec(dllexport)
#  else
#    define JINV_API __declspec(dllimport)
#  endif
#else
#  define JINV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jinv_status {
    JINV_OK = 0,
    JINV_RESIDUAL = 1,      /* result returned, residual not below tolerance */
    JINV_E_PARSE = 2,
    JINV_E_DOMAIN = 3,
    JINV_E_PRECISION = 4,   /* precision or exponent range exceeded */
    JINV_E_INADMISSIBLE = 5,
    JINV_SHORTFALL = 6,     /* report returned, some example below its gate */
    JINV_E_POLE = 7,
    JINV_E_CONVERGENCE = 8,
    JINV_E_NONGENERIC = 9,
    JINV_E_INVALID_ARGUMENT = 10,
    JINV_E_INTERNAL = 11,
    JINV_E_UNCOVERED = 12
} jinv_status;

typedef enum jinv_point {
    JINV_POINT_I = 0,
    JINV_POINT_RHO = 1,
    JINV_POINT_AUTO = 2     /* rho, falling back to i when inadmissible */
} jinv_point;

typedef enum jinv_series_kind {
    JINV_SERIES_C_I = 0,
    JINV_SERIES_C_RHO = 1,
    JINV_SERIES_J_AT_I = 2,
    JINV_SERIES_J_AT_RHO = 3,
    JINV_SERIES_J_Q = 4     /* q^-1, q^0, q^1, ... */
} jinv_series_kind;

typedef struct jinv_context jinv_context;
typedef struct jinv_eval jinv_eval;
typedef struct jinv_inversion jinv_inversion;
typedef struct jinv_series jinv_series;
typedef struct jinv_repro jinv_repro;

JINV_API const char *jinv_version(void);
JINV_API const char *jinv_status_name(jinv_status status);
/* Message of the last failing call on this thread; "" if none. */
JINV_API const char *jinv_last_error(void);

/* 0 selects the default for digits (50), guard_digits (10) and max_terms (20000). */
JINV_API jinv_status jinv_context_create(unsigned digits, unsigned guard_digits, size_t max_terms,
                                         jinv_context **out);
JINV_API void jinv_context_destroy(jinv_context *ctx);
JINV_API unsigned jinv_context_digits(const jinv_context *ctx);

/* tau is a complex literal ("a+bi", "bi", "a") or one of "i", "rho". */
JINV_API jinv_status jinv_eval_create(const jinv_context *ctx, const char *tau, jinv_eval **out);
JINV_API void jinv_eval_destroy(jinv_eval *eval);
JINV_API const char *jinv_eval_tau(const jinv_eval *eval);
JINV_API const char *jinv_eval_tau_reduced(const jinv_eval *eval);
JINV_API const char *jinv_eval_j(const jinv_eval *eval);

/* terms = 0 evaluates the series to full precision; otherwise exactly the
 * first `terms` terms of each hypergeometric series are summed. Returns
 * JINV_RESIDUAL with *out set when the forward check misses tolerance. */
JINV_API jinv_status jinv_invert_create(const jinv_context *ctx, const char *alpha, jinv_point point, size_t terms,
                                        jinv_inversion **out);
JINV_API void jinv_invert_destroy(jinv_inversion *inv);
JINV_API jinv_point jinv_invert_point(const jinv_inversion *inv);
JINV_API const char *jinv_invert_alpha(const jinv_inversion *inv);
JINV_API const char *jinv_invert_t0(const jinv_inversion *inv);
JINV_API const char *jinv_invert_c_value(const jinv_inversion *inv);
JINV_API const char *jinv_invert_tau_raw(const jinv_inversion *inv);
JINV_API const char *jinv_invert_tau_normalized(const jinv_inversion *inv);
JINV_API const char *jinv_invert_tau_reduced(const jinv_inversion *inv);
/* "[[a, b], [c, d]]" taking tau_raw to tau_reduced. */
JINV_API const char *jinv_invert_reduction_map(const jinv_inversion *inv);
JINV_API const char *jinv_invert_j(const jinv_inversion *inv);
JINV_API const char *jinv_invert_residual(const jinv_inversion *inv);
JINV_API size_t jinv_invert_terms_used(const jinv_inversion *inv);
JINV_API int jinv_invert_succeeded(const jinv_inversion *inv);
JINV_API size_t jinv_invert_warning_count(const jinv_inversion *inv);
JINV_API const char *jinv_invert_warning(const jinv_inversion *inv, size_t index);

/* The j expansions take n <= 16. */
JINV_API jinv_status jinv_series_create(const jinv_context *ctx, jinv_series_kind kind, size_t n, jinv_series **out);
JINV_API void jinv_series_destroy(jinv_series *series);
JINV_API size_t jinv_series_count(const jinv_series *series);
JINV_API const char *jinv_series_coefficient(const jinv_series *series, size_t index);

/* digits = 0 runs each example at its own precision. Returns
 * JINV_SHORTFALL with *out set when an example misses its gate. */
JINV_API jinv_status jinv_repro_run(unsigned digits, jinv_repro **out);
JINV_API void jinv_repro_destroy(jinv_repro *repro);
JINV_API size_t jinv_repro_count(const jinv_repro *repro);
JINV_API int jinv_repro_all_passed(const jinv_repro *repro);
JINV_API const char *jinv_repro_name(const jinv_repro *repro, size_t index);
JINV_API const char *jinv_repro_description(const jinv_repro *repro, size_t index);
JINV_API unsigned jinv_repro_digits(const jinv_repro *repro, size_t index);
JINV_API size_t jinv_repro_terms(const jinv_repro *repro, size_t index);
JINV_API long jinv_repro_claimed(const jinv_repro *repro, size_t index);
JINV_API long jinv_repro_required(const jinv_repro *repro, size_t index);
/* Upper bound on agreement, or -1 when there is none. */
JINV_API long jinv_repro_below(const jinv_repro *repro, size_t index);
JINV_API long jinv_repro_achieved(const jinv_repro *repro, size_t index);
JINV_API int jinv_repro_passed(const jinv_repro *repro, size_t index);
JINV_API const char *jinv_repro_value(const jinv_repro *repro, size_t index);
JINV_API const char *jinv_repro_target(const jinv_repro *repro, size_t index);
JINV_API size_t jinv_repro_warning_count(const jinv_repro *repro, size_t index);
JINV_API const char *jinv_repro_warning(const jinv_repro *repro, size_t index, size_t warning);

#ifdef __cplusplus
}
#endif

#endif
