/* stringspec: sine-series toolkit for the fixed-end vibrating string.
 *
 * C API over the C++ core: opaque handles, status codes, no exceptions
 * across the boundary. All handles are immutable after creation and safe to
 * share between threads; every call is reentrant.
 */
#ifndef STRINGSPEC_H
#define STRINGSPEC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SSP_BUILD)
#    define SSP_API __declspec(dllexport)
#  else
#    define SSP_API __declspec(dllimport)
#  endif
#else
#  define SSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssp_status {
    SSP_OK = 0,
    SSP_ERR_ARG = 1,          /* null pointer, bad enum, malformed request */
    SSP_ERR_PRECONDITION = 2, /* mathematical precondition violated */
    SSP_ERR_SINGULAR = 3,     /* boundary system numerically singular */
    SSP_ERR_UNRELIABLE = 4,   /* derivative/quadrature failed to converge */
    SSP_ERR_NONFINITE = 5,    /* evaluation produced a non-finite value */
    SSP_ERR_INTERNAL = 6
} ssp_status;

SSP_API const char* ssp_version(void);
SSP_API const char* ssp_status_name(ssp_status s);
/* Thread-local detail message for the most recent failure in this thread. */
SSP_API const char* ssp_last_error(void);

typedef struct ssp_function ssp_function;
typedef struct ssp_extension ssp_extension;
typedef struct ssp_decomposition ssp_decomposition;
typedef struct ssp_solution ssp_solution;

/* ---- functions on an interval ---- */

/* Registry names: "poly" (ascending coefficients), "constant" {c},
 * "sine_mode" {m[, amp]}, "cosine_mode" {m[, amp]}, "one_minus_cos" {k[, amp]}. */
SSP_API ssp_status ssp_function_create(const char* name, const double* params, size_t n_params,
                                       double left, double right, ssp_function** out);
SSP_API ssp_status ssp_function_create_samples(const double* values, size_t count, double left,
                                               double right, ssp_function** out);
SSP_API ssp_status ssp_function_eval(const ssp_function* f, double x, double* value);
/* Uniform grid including both endpoints; `values` must hold n_points slots. */
SSP_API ssp_status ssp_function_sample(const ssp_function* f, size_t n_points, double* values);
/* One-sided derivative estimate at an endpoint (0 = left, 1 = right), order 0..4. */
SSP_API ssp_status ssp_one_sided_derivative(const ssp_function* f, int right_end, int order,
                                            double* value);
SSP_API void ssp_function_free(ssp_function* f);

/* ---- extensions to [-L, L] ---- */

typedef enum ssp_parity { SSP_PARITY_ODD = 0, SSP_PARITY_EVEN = 1, SSP_PARITY_MIXED = 2 } ssp_parity;

SSP_API ssp_status ssp_extend_odd(const ssp_function* f, ssp_extension** out);
SSP_API ssp_status ssp_extend_even(const ssp_function* f, ssp_extension** out);
/* Boundary-matching decomposition first, then even+odd extension: class C^{2n}. */
SSP_API ssp_status ssp_extend_composed(const ssp_function* f, int order, ssp_extension** out);
SSP_API ssp_status ssp_extension_eval(const ssp_extension* e, double x, double* value);
SSP_API ssp_status ssp_extension_parity(const ssp_extension* e, ssp_parity* parity);
/* seam 0: x = 0; seam 1: x = +-L under endpoint identification. */
SSP_API ssp_status ssp_extension_seam_class(const ssp_extension* e, int seam, int* k);
/* Per-order one-sided values at a seam; arrays sized max_order+1. Orders past
 * the verified class report the (mismatched) estimates. */
SSP_API ssp_status ssp_extension_seam_detail(const ssp_extension* e, int seam, int max_order,
                                             double* from_left, double* from_right);
SSP_API void ssp_extension_free(ssp_extension* e);

/* Parity probe for an arbitrary function on [-L, L]. */
SSP_API ssp_status ssp_parity_check(const ssp_function* h, ssp_parity* parity, double* deviation);

/* ---- boundary-matching decomposition ---- */

SSP_API ssp_status ssp_decompose(const ssp_function* f, int order, ssp_decomposition** out);
/* f1 coefficients, ascending; returns the count via *count (capacity may be 0
 * to query). */
SSP_API ssp_status ssp_decomposition_f1(const ssp_decomposition* d, double* coeffs, size_t capacity,
                                        size_t* count);
/* Largest boundary-condition residual of the remainder f2. */
SSP_API ssp_status ssp_decomposition_residual(const ssp_decomposition* d, double* value);
SSP_API ssp_status ssp_decomposition_condition(const ssp_decomposition* d, double* value);
SSP_API ssp_status ssp_decomposition_f2_eval(const ssp_decomposition* d, double x, double* value);
SSP_API void ssp_decomposition_free(ssp_decomposition* d);

/* Determinant of the reduced boundary kernel matrix (2 L^3 at order 1). */
SSP_API ssp_status ssp_boundary_determinant(int order, double length, double* det,
                                            double* condition);

/* ---- sine series ---- */

SSP_API ssp_status ssp_sine_coefficient(const ssp_function* f, int mode, double* value);
/* Rows mode = 1..max_mode. bound_order selects the decay bound C/m^n measured
 * on the composed extension of order `extend_order`. Arrays hold max_mode
 * entries; any of them may be NULL. ratios are (|b_m|/2)/bound. */
SSP_API ssp_status ssp_coefficient_table(const ssp_function* f, int extend_order, int bound_order,
                                         int max_mode, double* values, double* bounds,
                                         double* ratios);
SSP_API ssp_status ssp_uniform_error(const ssp_function* f, int truncation, double* sup_error);
/* Same probe with deterministic interior-grid jitter from `seed`. */
SSP_API ssp_status ssp_uniform_error_jittered(const ssp_function* f, int truncation,
                                              unsigned long long seed, double* sup_error);
/* Log-log decay slope of |b_m| over modes in [m_lo, m_hi]. */
SSP_API ssp_status ssp_decay_slope(const ssp_function* f, int m_lo, int m_hi, double* slope);
/* Guaranteed sup-norm series remainder past `truncation` from the odd
 * extension's decay bound at its seam-verified order (written to *order).
 * *value is +inf when the verified order is below 2 (no finite guarantee). */
SSP_API ssp_status ssp_sine_tail_bound(const ssp_function* f, int truncation, double* value,
                                       int* order);

/* ---- wave solutions ---- */

SSP_API ssp_status ssp_solve(const ssp_function* f0, const ssp_function* g0, double tension,
                             double density, int truncation, ssp_solution** out);
SSP_API ssp_status ssp_solution_eval(const ssp_solution* s, double x, double t, double* value);
/* Analytic modal curvature F_xx. */
SSP_API ssp_status ssp_solution_curvature(const ssp_solution* s, double x, double t, double* value);
SSP_API ssp_status ssp_solution_mode(const ssp_solution* s, int m, double* cos_amp, double* sin_amp);
SSP_API ssp_status ssp_solution_energy(const ssp_solution* s, double t, double* value);
/* Max |F_tt - (T/mu) F_xx| by central differences (step h) on an nx-by-nt
 * interior mesh spanning t in [t0, t1]. */
SSP_API ssp_status ssp_solution_residual(const ssp_solution* s, size_t nx, size_t nt, double t0,
                                         double t1, double h, double* value);
SSP_API void ssp_solution_free(ssp_solution* s);

SSP_API ssp_status ssp_dalembert(const ssp_function* f0, const ssp_function* g0, double tension,
                                 double density, double x, double t, double* value);

/* ---- acceptance suite ---- */

typedef void (*ssp_verify_callback)(const char* name, int passed, const char* detail, void* user);
/* Runs every acceptance criterion; returns SSP_OK with *all_passed = 0 when
 * criteria fail (the run itself succeeded). */
SSP_API ssp_status ssp_verify(ssp_verify_callback cb, void* user, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* STRINGSPEC_H */
