/* C interface to the polynomial-asymptotics library.
 *
 * Every entry point returns a heisen_status; HEISEN_OK means the output
 * parameters were written. On failure heisen_last_error() carries a
 * human-readable message for the calling thread until the next failing call.
 * Opaque handles must be released with their matching _free function.
 *
 * Large magnitudes (rho^n and friends) are reported as a complex mantissa
 * plus a separate decimal exponent so callers never see overflow.
 */
#ifndef HEISEN_H
#define HEISEN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct heisen_complex {
    double re;
    double im;
} heisen_complex;

typedef enum heisen_status {
    HEISEN_OK = 0,
    HEISEN_ERR_NONFINITE_INPUT,
    HEISEN_ERR_PARAM_OUT_OF_RANGE,
    HEISEN_ERR_THETA_OUT_OF_RANGE,
    HEISEN_ERR_DEGREE_TOO_LARGE,
    HEISEN_ERR_CENTER_MISMATCH,
    HEISEN_ERR_DIVISION_BY_NEAR_ZERO,
    HEISEN_ERR_CANCELLATION_FAILURE,
    HEISEN_ERR_ORDER_EXHAUSTED,
    HEISEN_ERR_GAMMA_POLE,
    HEISEN_ERR_B_POLE,
    HEISEN_ERR_NON_CONVERGENCE,
    HEISEN_ERR_SERIES_DIVERGENCE,
    HEISEN_ERR_TERM_COUNT_EXCEEDS_TABLE,
    HEISEN_ERR_ZERO_COUNT_MISMATCH,
    HEISEN_ERR_ARGUMENT_TOO_SMALL,
    HEISEN_ERR_PRECONDITION_VIOLATION,
    HEISEN_ERR_INTERNAL
} heisen_status;

/* T-function routes, also used to report which route an evaluation took */
enum {
    HEISEN_ROUTE_AUTO = 0,
    HEISEN_ROUTE_SERIES = 1,
    HEISEN_ROUTE_KUMMER = 2,
    HEISEN_ROUTE_BESSEL = 3
};

/* Asymptotic-expansion forms */
enum {
    HEISEN_FORM_T = 0,      /* two T-functions against alpha_k / beta_k sums */
    HEISEN_FORM_KUMMER = 1, /* confluent M and M' against c_k / d_k sums */
    HEISEN_FORM_BESSEL = 2  /* equal-parameter Bessel substitution */
};

const char* heisen_version(void);
const char* heisen_status_name(heisen_status s);
const char* heisen_last_error(void);

/* ---- exact evaluation -------------------------------------------------- */

/* C_n at rho e^{i theta}: mantissa is the unit-circle value, exp10 carries
 * n log10(rho). theta may be any finite angle; it is reduced internally. */
heisen_status heisen_eval_exact(double alpha, double beta, long n, double rho,
                                double theta, heisen_complex* mant, double* exp10);

/* classical three-term-recurrence oracle, alpha > -1/2, alpha != 0, |x| <= 1 */
heisen_status heisen_gegenbauer(double alpha, long n, double x, double* out);

/* ---- special-function pair --------------------------------------------- */

heisen_status heisen_t_pair(double alpha, double beta, double x, int route,
                            heisen_complex* t1, heisen_complex* t2, int* route_used);

/* ---- asymptotic expansion ----------------------------------------------- */

/* form: HEISEN_FORM_*. m_used reports the term count actually applied (the
 * small-angle branch clamps to 1); low_confidence flags n below the trusted
 * asymptotic range; route_used reports the backing special-function route. */
heisen_status heisen_expand(double alpha, double beta, long n, double rho,
                            double theta, int m, int form, heisen_complex* mant,
                            double* exp10, int* m_used, int* route_used,
                            int* low_confidence);

/* ---- coefficient table -------------------------------------------------- */

typedef struct heisen_coeff_table heisen_coeff_table;

heisen_status heisen_coeff_table_build(double alpha, double beta, double theta,
                                       int K, heisen_coeff_table** out);
void heisen_coeff_table_free(heisen_coeff_table* t);
int heisen_coeff_table_depth(const heisen_coeff_table* t);
heisen_status heisen_coeff_table_row(const heisen_coeff_table* t, int k,
                                     heisen_complex* alpha_k, heisen_complex* beta_k,
                                     heisen_complex* c_k, heisen_complex* d_k);

/* ---- error profile ------------------------------------------------------ */

typedef struct heisen_error_profile heisen_error_profile;

heisen_status heisen_error_profile_build(double alpha, double beta, const long* n_grid,
                                         size_t n_count, const double* theta_grid,
                                         size_t theta_count, int m,
                                         heisen_error_profile** out);
void heisen_error_profile_free(heisen_error_profile* e);
heisen_status heisen_error_profile_cell(const heisen_error_profile* e, size_t theta_index,
                                        size_t n_index, double* abs_err, double* rel_err,
                                        double* bound_ratio);
heisen_status heisen_error_profile_slope(const heisen_error_profile* e, size_t theta_index,
                                         double* slope);
double heisen_error_profile_max_bound_ratio(const heisen_error_profile* e);

/* ---- zero reports -------------------------------------------------------- */

typedef struct heisen_zero_report heisen_zero_report;

heisen_status heisen_find_zeros(double alpha, long n, heisen_zero_report** out);
void heisen_zero_report_free(heisen_zero_report* r);
long heisen_zero_report_count(const heisen_zero_report* r);
heisen_status heisen_zero_report_row(const heisen_zero_report* r, long k, double* zero,
                                     double* est_bessel, double* est_uniform);

heisen_status heisen_zero_order_check(double alpha, int k, long n1, long n2, double* e1,
                                      double* e2, double* ratio, int* degenerate);

heisen_status heisen_cosine_approx(double alpha, long n, double theta, double* value,
                                   double* rel_band);

/* ---- first-component positivity scan ------------------------------------ */

heisen_status heisen_prop1_scan(double alpha, double beta, double x_max, long grid,
                                double* min_abs_t1, double* x_at_min,
                                double* min_im_quantity, int* t1_nonvanishing,
                                int* phase_monotone);

#ifdef __cplusplus
}
#endif

#endif /* HEISEN_H */
