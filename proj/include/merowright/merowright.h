/* C interface to the merowright library.
 *
 * Every fallible call returns an mw_status; MW_OK is zero. On failure the
 * thread-local mw_last_error() holds a description. Objects returned through
 * out-pointers are owned by the caller and released with the matching
 * *_destroy function. Inputs are never modified.
 */
#ifndef MEROWRIGHT_H
#define MEROWRIGHT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MEROWRIGHT_BUILDING)
#    define MW_API __declspec(dllexport)
#  else
#    define MW_API __declspec(dllimport)
#  endif
#else
#  define MW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define MW_SCHEMA_VERSION 1

typedef enum mw_status {
  MW_OK = 0,
  MW_ERR_DOMAIN = 1,       /* argument outside the operation's domain */
  MW_ERR_RANGE = 2,        /* value not representable; log value still reported where offered */
  MW_ERR_UNSUPPORTED = 3,  /* e.g. Pochhammer form with non-unit weights */
  MW_ERR_PRECONDITION = 4, /* class precondition: signed coefficients, non-member, |b_k| > 1 */
  MW_ERR_POLE = 5,         /* evaluation at z = 0 */
  MW_ERR_DEGENERATE = 6,   /* numeric radius could not bracket */
  MW_ERR_NULL_ARGUMENT = 7,
  MW_ERR_INTERNAL = 8
} mw_status;

typedef struct mw_complex {
  double re;
  double im;
} mw_complex;

typedef struct mw_class_params {
  double alpha; /* 0 < alpha < 1 */
  double eta;   /* 0 < eta <= 1 */
} mw_class_params;

typedef struct mw_wright mw_wright;
typedef struct mw_function mw_function;
typedef struct mw_closure_order mw_closure_order;
typedef struct mw_radius_result mw_radius_result;
typedef struct mw_report mw_report;

MW_API const char* mw_version(void);
MW_API const char* mw_status_name(mw_status status);
MW_API const char* mw_last_error(void);

/* ---- Gamma kernel ------------------------------------------------------ */

/* upper and lower hold interleaved (value, weight) pairs: 2*n_upper and
 * 2*n_lower doubles. */
MW_API mw_status mw_wright_create(const double* upper, size_t n_upper, const double* lower, size_t n_lower,
                                  mw_wright** out);
MW_API void mw_wright_destroy(mw_wright* params);

MW_API mw_status mw_log_gamma(double x, double* out);
/* log_value may be NULL. On MW_ERR_RANGE *log_value is still written. */
MW_API mw_status mw_omega(const mw_wright* params, double* value, double* log_value);
MW_API mw_status mw_sigma_k(const mw_wright* params, int k, double* value, double* log_value);
MW_API mw_status mw_sigma_k_pochhammer(const mw_wright* params, int k, double* value);
/* last_term and tail_flag may be NULL. */
MW_API mw_status mw_wright_psi(const mw_wright* params, mw_complex z, int n_max, mw_complex* value,
                               double* last_term, int* tail_flag);

/* ---- Truncated meromorphic functions ------------------------------------ */

/* coeffs[k-1] = a_k; n = 0 gives f(z) = 1/z (coeffs may then be NULL). */
MW_API mw_status mw_function_create(const double* coeffs, size_t n, mw_function** out);
MW_API void mw_function_destroy(mw_function* f);
MW_API size_t mw_function_size(const mw_function* f);
/* Valid until the function is destroyed; NULL when the size is zero. */
MW_API const double* mw_function_coeffs(const mw_function* f);
MW_API int mw_function_nonnegative(const mw_function* f);

/* derivative is 0, 1 or 2. */
MW_API mw_status mw_evaluate(const mw_function* f, mw_complex z, int derivative, mw_complex* out);
MW_API mw_status mw_hadamard(const mw_function* f, const mw_function* g, mw_function** out);
MW_API mw_status mw_apply_operator(const mw_wright* params, const mw_function* f, mw_function** out);

/* ---- Class V(alpha, eta) ------------------------------------------------ */

MW_API mw_status mw_class_validate(mw_class_params cp);
MW_API mw_status mw_coefficient_weight(mw_class_params cp, const mw_wright* wp, int k, double* out);
MW_API mw_status mw_membership_margin(const mw_function* f, mw_class_params cp, const mw_wright* wp,
                                      double* out);
MW_API mw_status mw_coefficient_bound(mw_class_params cp, const mw_wright* wp, int k, double* out);
MW_API mw_status mw_extremal_function(mw_class_params cp, const mw_wright* wp, int k, mw_function** out);
MW_API mw_status mw_growth_bounds(mw_class_params cp, const mw_wright* wp, double r, double* lower,
                                  double* upper);
MW_API mw_status mw_distortion_bounds(mw_class_params cp, const mw_wright* wp, double r, double* lower,
                                      double* upper);

/* ---- Hadamard closure --------------------------------------------------- */

typedef struct mw_closure_entry {
  int k;
  double order;
  double denominator;
  int denominator_positive;
  int out_of_range;
} mw_closure_entry;

MW_API mw_status mw_convolution_order(mw_class_params cp, const mw_wright* wp, int k_max,
                                      mw_closure_order** out);
MW_API mw_status mw_quadratic_mean_order(mw_class_params cp, const mw_wright* wp, int k_max,
                                         mw_closure_order** out);
MW_API void mw_closure_order_destroy(mw_closure_order* order);
MW_API size_t mw_closure_order_size(const mw_closure_order* order);
MW_API mw_status mw_closure_order_entry(const mw_closure_order* order, size_t index, mw_closure_entry* out);
/* Returns 1 and writes *aggregate when every denominator is positive;
 * otherwise returns 0 and writes the first offending k. Either pointer may be
 * NULL. */
MW_API int mw_closure_order_aggregate(const mw_closure_order* order, double* aggregate, int* first_bad_k);

MW_API mw_status mw_quadratic_combination(const mw_function* f1, const mw_function* f2, mw_function** out);
/* b holds b_1..b_n with |b_k| <= 1. */
MW_API mw_status mw_bounded_multiplier_convolve(const mw_function* f, const double* b, size_t n,
                                                mw_class_params cp, const mw_wright* wp, mw_function** out,
                                                double* margin);

/* ---- Radii -------------------------------------------------------------- */

typedef enum mw_condition_kind { MW_STARLIKE = 0, MW_CONVEX = 1 } mw_condition_kind;
typedef enum mw_tail_trend { MW_TAIL_DECREASING = 0, MW_TAIL_INCREASING = 1, MW_TAIL_MIXED = 2 } mw_tail_trend;

typedef struct mw_radius_entry {
  int k;
  double candidate;
  double printed_candidate; /* NaN for starlikeness */
} mw_radius_entry;

MW_API mw_status mw_starlike_radius(mw_class_params cp, const mw_wright* wp, double delta, int k_max,
                                    mw_radius_result** out);
MW_API mw_status mw_convex_radius(mw_class_params cp, const mw_wright* wp, double kappa, int k_max,
                                  mw_radius_result** out);
MW_API void mw_radius_result_destroy(mw_radius_result* result);
MW_API double mw_radius_result_radius(const mw_radius_result* result);
MW_API int mw_radius_result_attained_k(const mw_radius_result* result);
MW_API int mw_radius_result_k_max(const mw_radius_result* result);
MW_API mw_tail_trend mw_radius_result_tail(const mw_radius_result* result);
MW_API size_t mw_radius_result_size(const mw_radius_result* result);
MW_API mw_status mw_radius_result_entry(const mw_radius_result* result, size_t index, mw_radius_entry* out);

MW_API mw_status mw_numeric_radius(const mw_function* f, mw_condition_kind kind, double order, double tol,
                                   int angles, double* out);

/* ---- Verification ------------------------------------------------------- */

typedef struct mw_sampling_plan {
  const double* radii;
  size_t n_radii;
  int angles;
  int include_ramp;
} mw_sampling_plan;

typedef struct mw_sample {
  double radius;
  int angle_index; /* -1 for real-axis ramp points */
  mw_complex z;
  double observed;
  double bound;
} mw_sample;

/* radii point to static storage: {0.5, 0.9, 0.99, 0.999}, 720 angles, ramp on. */
MW_API mw_sampling_plan mw_default_plan(void);

MW_API mw_status mw_condition_ratio(const mw_function* f, mw_class_params cp, const mw_wright* wp, mw_complex z,
                                    double* out);
MW_API mw_status mw_verify_membership(const mw_function* f, mw_class_params cp, const mw_wright* wp,
                                      const mw_sampling_plan* plan, mw_report** out);
MW_API mw_status mw_verify_growth(const mw_function* f, mw_class_params cp, const mw_wright* wp,
                                  const mw_sampling_plan* plan, double slack, mw_report** out);
MW_API mw_status mw_verify_distortion(const mw_function* f, mw_class_params cp, const mw_wright* wp,
                                      const mw_sampling_plan* plan, double slack, mw_report** out);
MW_API mw_status mw_verify_radius(const mw_function* f, mw_condition_kind kind, double order, double claimed_radius,
                                  const mw_sampling_plan* plan, mw_report** out);

MW_API void mw_report_destroy(mw_report* report);
MW_API const char* mw_report_check_name(const mw_report* report);
MW_API int mw_report_passed(const mw_report* report);
MW_API double mw_report_margin(const mw_report* report);
MW_API int mw_report_samples(const mw_report* report);
MW_API int mw_report_singular_samples(const mw_report* report);
/* Return 1 when the value exists. */
MW_API int mw_report_worst(const mw_report* report, mw_sample* out);
MW_API int mw_report_hypothesis_margin(const mw_report* report, double* out);

#ifdef __cplusplus
}
#endif

#endif /* MEROWRIGHT_H */
