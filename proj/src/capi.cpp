#include <heisen.h>

#include <heisen/coeffs.hpp>
#include <heisen/exact.hpp>
#include <heisen/expansion.hpp>
#include <heisen/special.hpp>
#include <heisen/types.hpp>
#include <heisen/zeros.hpp>

#include <exception>
#include <string>
#include <utility>

struct heisen_coeff_table {
    heisen::CoeffTable t;
};

struct heisen_error_profile {
    heisen::ErrorProfile e;
};

struct heisen_zero_report {
    heisen::ZeroReport r;
};

namespace {

thread_local std::string g_last_error;

heisen_status to_status(heisen::errc c) {
    using heisen::errc;
    switch (c) {
        case errc::ok: return HEISEN_OK;
        case errc::nonfinite_input: return HEISEN_ERR_NONFINITE_INPUT;
        case errc::param_out_of_range: return HEISEN_ERR_PARAM_OUT_OF_RANGE;
        case errc::theta_out_of_range: return HEISEN_ERR_THETA_OUT_OF_RANGE;
        case errc::degree_too_large: return HEISEN_ERR_DEGREE_TOO_LARGE;
        case errc::center_mismatch: return HEISEN_ERR_CENTER_MISMATCH;
        case errc::division_by_near_zero: return HEISEN_ERR_DIVISION_BY_NEAR_ZERO;
        case errc::cancellation_failure: return HEISEN_ERR_CANCELLATION_FAILURE;
        case errc::order_exhausted: return HEISEN_ERR_ORDER_EXHAUSTED;
        case errc::gamma_pole: return HEISEN_ERR_GAMMA_POLE;
        case errc::b_pole: return HEISEN_ERR_B_POLE;
        case errc::non_convergence: return HEISEN_ERR_NON_CONVERGENCE;
        case errc::series_divergence: return HEISEN_ERR_SERIES_DIVERGENCE;
        case errc::term_count_exceeds_table: return HEISEN_ERR_TERM_COUNT_EXCEEDS_TABLE;
        case errc::zero_count_mismatch: return HEISEN_ERR_ZERO_COUNT_MISMATCH;
        case errc::argument_too_small: return HEISEN_ERR_ARGUMENT_TOO_SMALL;
        case errc::precondition_violation: return HEISEN_ERR_PRECONDITION_VIOLATION;
        case errc::internal_error: return HEISEN_ERR_INTERNAL;
    }
    return HEISEN_ERR_INTERNAL;
}

template <typename F>
heisen_status guarded(F&& f) {
    try {
        f();
        return HEISEN_OK;
    } catch (const heisen::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HEISEN_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return HEISEN_ERR_INTERNAL;
    }
}

heisen_status null_output() {
    g_last_error = "null output pointer";
    return HEISEN_ERR_PARAM_OUT_OF_RANGE;
}

heisen_complex pack(heisen::cplx z) { return heisen_complex{z.real(), z.imag()}; }

int route_code(heisen::TRoute r) {
    switch (r) {
        case heisen::TRoute::auto_route: return HEISEN_ROUTE_AUTO;
        case heisen::TRoute::series: return HEISEN_ROUTE_SERIES;
        case heisen::TRoute::kummer: return HEISEN_ROUTE_KUMMER;
        case heisen::TRoute::bessel: return HEISEN_ROUTE_BESSEL;
    }
    return HEISEN_ROUTE_AUTO;
}

heisen::TRoute route_from_code(int route) {
    switch (route) {
        case HEISEN_ROUTE_SERIES: return heisen::TRoute::series;
        case HEISEN_ROUTE_KUMMER: return heisen::TRoute::kummer;
        case HEISEN_ROUTE_BESSEL: return heisen::TRoute::bessel;
        case HEISEN_ROUTE_AUTO: return heisen::TRoute::auto_route;
        default:
            heisen::raise(heisen::errc::param_out_of_range, "unknown route code");
    }
}

} // namespace

extern "C" {

const char* heisen_version(void) { return "0.1.0"; }

const char* heisen_status_name(heisen_status s) {
    switch (s) {
        case HEISEN_OK: return "Ok";
        case HEISEN_ERR_NONFINITE_INPUT: return "NonfiniteInput";
        case HEISEN_ERR_PARAM_OUT_OF_RANGE: return "ParamOutOfRange";
        case HEISEN_ERR_THETA_OUT_OF_RANGE: return "ThetaOutOfRange";
        case HEISEN_ERR_DEGREE_TOO_LARGE: return "DegreeTooLarge";
        case HEISEN_ERR_CENTER_MISMATCH: return "CenterMismatch";
        case HEISEN_ERR_DIVISION_BY_NEAR_ZERO: return "DivisionByNearZero";
        case HEISEN_ERR_CANCELLATION_FAILURE: return "CancellationFailure";
        case HEISEN_ERR_ORDER_EXHAUSTED: return "OrderExhausted";
        case HEISEN_ERR_GAMMA_POLE: return "GammaPole";
        case HEISEN_ERR_B_POLE: return "BPole";
        case HEISEN_ERR_NON_CONVERGENCE: return "NonConvergence";
        case HEISEN_ERR_SERIES_DIVERGENCE: return "SeriesDivergenceGuard";
        case HEISEN_ERR_TERM_COUNT_EXCEEDS_TABLE: return "TermCountExceedsTable";
        case HEISEN_ERR_ZERO_COUNT_MISMATCH: return "ZeroCountMismatch";
        case HEISEN_ERR_ARGUMENT_TOO_SMALL: return "ArgumentTooSmall";
        case HEISEN_ERR_PRECONDITION_VIOLATION: return "PreconditionViolation";
        case HEISEN_ERR_INTERNAL: return "InternalError";
    }
    return "InternalError";
}

const char* heisen_last_error(void) { return g_last_error.c_str(); }

heisen_status heisen_eval_exact(double alpha, double beta, long n, double rho,
                                double theta, heisen_complex* mant, double* exp10) {
    if (!mant || !exp10) return null_output();
    return guarded([&] {
        heisen::cplx unit = heisen::eval_exact(heisen::Params{alpha, beta}, n, theta);
        heisen::ScaledComplex s = heisen::assemble_at_rho(unit, n, rho);
        *mant = pack(s.mant);
        *exp10 = s.exp10;
    });
}

heisen_status heisen_gegenbauer(double alpha, long n, double x, double* out) {
    if (!out) return null_output();
    return guarded([&] { *out = heisen::gegenbauer_oracle(alpha, n, x); });
}

heisen_status heisen_t_pair(double alpha, double beta, double x, int route,
                            heisen_complex* t1, heisen_complex* t2, int* route_used) {
    if (!t1 || !t2) return null_output();
    return guarded([&] {
        heisen::TPair p =
            heisen::t_pair(heisen::Params{alpha, beta}, x, route_from_code(route));
        *t1 = pack(p.t1);
        *t2 = pack(p.t2);
        if (route_used) *route_used = route_code(p.route_used);
    });
}

heisen_status heisen_expand(double alpha, double beta, long n, double rho, double theta,
                            int m, int form, heisen_complex* mant, double* exp10,
                            int* m_used, int* route_used, int* low_confidence) {
    if (!mant || !exp10) return null_output();
    return guarded([&] {
        heisen::Params p{alpha, beta};
        heisen::EvalPoint pt{n, rho, theta};
        heisen::ExpansionResult r = [&] {
            switch (form) {
                case HEISEN_FORM_T: return heisen::expand_t(p, pt, m);
                case HEISEN_FORM_KUMMER: return heisen::expand_kummer(p, pt, m);
                case HEISEN_FORM_BESSEL:
                    if (alpha != beta)
                        heisen::raise(heisen::errc::param_out_of_range,
                                      "Bessel form needs alpha = beta");
                    return heisen::expand_bessel(alpha, pt, m);
                default:
                    heisen::raise(heisen::errc::param_out_of_range, "unknown form code");
            }
        }();
        *mant = pack(r.value.mant);
        *exp10 = r.value.exp10;
        if (m_used) *m_used = r.m;
        if (route_used) *route_used = route_code(r.t_used.route_used);
        if (low_confidence) *low_confidence = r.low_confidence ? 1 : 0;
    });
}

heisen_status heisen_coeff_table_build(double alpha, double beta, double theta, int K,
                                       heisen_coeff_table** out) {
    if (!out) return null_output();
    return guarded([&] {
        auto t = heisen::coeff_table(heisen::Params{alpha, beta}, theta, K);
        *out = new heisen_coeff_table{std::move(t)};
    });
}

void heisen_coeff_table_free(heisen_coeff_table* t) { delete t; }

int heisen_coeff_table_depth(const heisen_coeff_table* t) { return t ? t->t.K : 0; }

heisen_status heisen_coeff_table_row(const heisen_coeff_table* t, int k,
                                     heisen_complex* alpha_k, heisen_complex* beta_k,
                                     heisen_complex* c_k, heisen_complex* d_k) {
    if (!t) {
        g_last_error = "null table handle";
        return HEISEN_ERR_PARAM_OUT_OF_RANGE;
    }
    if (k < 0 || k >= t->t.K) {
        g_last_error = "row index outside table depth";
        return HEISEN_ERR_PARAM_OUT_OF_RANGE;
    }
    if (alpha_k) *alpha_k = pack(t->t.alpha_k[k]);
    if (beta_k) *beta_k = pack(t->t.beta_k[k]);
    if (c_k) *c_k = pack(t->t.c_k[k]);
    if (d_k) *d_k = pack(t->t.d_k[k]);
    return HEISEN_OK;
}

heisen_status heisen_error_profile_build(double alpha, double beta, const long* n_grid,
                                         size_t n_count, const double* theta_grid,
                                         size_t theta_count, int m,
                                         heisen_error_profile** out) {
    if (!out || !n_grid || !theta_grid) return null_output();
    return guarded([&] {
        std::vector<long> ns(n_grid, n_grid + n_count);
        std::vector<double> ths(theta_grid, theta_grid + theta_count);
        auto e = heisen::error_profile(heisen::Params{alpha, beta}, ns, ths, m);
        *out = new heisen_error_profile{std::move(e)};
    });
}

void heisen_error_profile_free(heisen_error_profile* e) { delete e; }

heisen_status heisen_error_profile_cell(const heisen_error_profile* e, size_t theta_index,
                                        size_t n_index, double* abs_err, double* rel_err,
                                        double* bound_ratio) {
    if (!e) {
        g_last_error = "null profile handle";
        return HEISEN_ERR_PARAM_OUT_OF_RANGE;
    }
    if (theta_index >= e->e.theta_grid.size() || n_index >= e->e.n_grid.size()) {
        g_last_error = "profile index outside grid";
        return HEISEN_ERR_PARAM_OUT_OF_RANGE;
    }
    if (abs_err) *abs_err = e->e.abs_err[theta_index][n_index];
    if (rel_err) *rel_err = e->e.rel_err[theta_index][n_index];
    if (bound_ratio) *bound_ratio = e->e.bound_ratio[theta_index][n_index];
    return HEISEN_OK;
}

heisen_status heisen_error_profile_slope(const heisen_error_profile* e, size_t theta_index,
                                         double* slope) {
    if (!e || !slope) return null_output();
    if (theta_index >= e->e.theta_grid.size()) {
        g_last_error = "profile index outside grid";
        return HEISEN_ERR_PARAM_OUT_OF_RANGE;
    }
    *slope = e->e.slopes[theta_index];
    return HEISEN_OK;
}

double heisen_error_profile_max_bound_ratio(const heisen_error_profile* e) {
    return e ? e->e.max_bound_ratio : 0.0;
}

heisen_status heisen_find_zeros(double alpha, long n, heisen_zero_report** out) {
    if (!out) return null_output();
    return guarded([&] {
        auto r = heisen::find_zeros(alpha, n);
        *out = new heisen_zero_report{std::move(r)};
    });
}

void heisen_zero_report_free(heisen_zero_report* r) { delete r; }

long heisen_zero_report_count(const heisen_zero_report* r) {
    return r ? long(r->r.zeros.size()) : 0;
}

heisen_status heisen_zero_report_row(const heisen_zero_report* r, long k, double* zero,
                                     double* est_bessel, double* est_uniform) {
    if (!r) {
        g_last_error = "null report handle";
        return HEISEN_ERR_PARAM_OUT_OF_RANGE;
    }
    if (k < 1 || k > long(r->r.zeros.size())) {
        g_last_error = "zero index outside report (1-based)";
        return HEISEN_ERR_PARAM_OUT_OF_RANGE;
    }
    if (zero) *zero = r->r.zeros[k - 1];
    if (est_bessel) *est_bessel = r->r.estimates_bessel[k - 1];
    if (est_uniform) *est_uniform = r->r.estimates_uniform[k - 1];
    return HEISEN_OK;
}

heisen_status heisen_zero_order_check(double alpha, int k, long n1, long n2, double* e1,
                                      double* e2, double* ratio, int* degenerate) {
    return guarded([&] {
        heisen::ZeroOrderCheck c = heisen::zero_order_check(alpha, k, n1, n2);
        if (e1) *e1 = c.e1;
        if (e2) *e2 = c.e2;
        if (ratio) *ratio = c.ratio;
        if (degenerate) *degenerate = c.degenerate ? 1 : 0;
    });
}

heisen_status heisen_cosine_approx(double alpha, long n, double theta, double* value,
                                   double* rel_band) {
    if (!value) return null_output();
    return guarded([&] {
        heisen::CosineApprox c = heisen::cosine_approx(alpha, n, theta);
        *value = c.value;
        if (rel_band) *rel_band = c.rel_band;
    });
}

heisen_status heisen_prop1_scan(double alpha, double beta, double x_max, long grid,
                                double* min_abs_t1, double* x_at_min,
                                double* min_im_quantity, int* t1_nonvanishing,
                                int* phase_monotone) {
    return guarded([&] {
        heisen::ScanReport s = heisen::prop1_scan(heisen::Params{alpha, beta}, x_max, grid);
        if (min_abs_t1) *min_abs_t1 = s.min_abs_t1;
        if (x_at_min) *x_at_min = s.x_at_min;
        if (min_im_quantity) *min_im_quantity = s.min_im_quantity;
        if (t1_nonvanishing) *t1_nonvanishing = s.t1_nonvanishing ? 1 : 0;
        if (phase_monotone) *phase_monotone = s.phase_monotone ? 1 : 0;
    });
}

} // extern "C"
