#include <heisen/expansion.hpp>

#include <heisen/exact.hpp>

#include <cmath>
#include <complex>

namespace heisen {

namespace {

const cplx I{0.0, 1.0};

void check_request(const Params& p, const EvalPoint& pt, int m) {
    p.validate();
    pt.validate();
    if (pt.n < 1) raise(errc::param_out_of_range, "asymptotic evaluation needs n >= 1");
    if (m < 1) raise(errc::param_out_of_range, "term count m must be at least 1");
    if (m > config::jet_order - config::jet_order_guard)
        raise(errc::term_count_exceeds_table, "term count m exceeds the jet budget");
    if (pt.theta > M_PI - config::cap_delta)
        raise(errc::theta_out_of_range, "expansion valid only up to pi - cap_delta");
}

// e^{i n theta} with the n-fold angle reduced in extended precision; at
// n ~ 1e6 a plain double product already costs ~1e-10 of phase
cplx unit_phase(long n, double theta) {
    long double ph = static_cast<long double>(theta) * static_cast<long double>(n);
    ph = std::fmod(ph, 2.0L * 3.14159265358979323846264338327950288L);
    return cplx{static_cast<double>(std::cos(ph)), static_cast<double>(std::sin(ph))};
}

ScaledComplex attach_radius(cplx mant, long n, double rho) {
    ScaledComplex s{mant, rho == 1.0 ? 0.0 : double(n) * std::log10(rho)};
    s.normalize();
    return s;
}

// inner sums Sum_{k<m} coeff_k n^{-k}
cplx horner_in_inv_n(const std::vector<cplx>& coeff, int m, long n) {
    cplx acc{0.0, 0.0};
    double inv = 1.0 / double(n);
    for (int k = m - 1; k >= 0; --k) acc = acc * inv + coeff[k];
    return acc;
}

ExpansionResult expand_two_function(const Params& p, const EvalPoint& pt, int m,
                                    TRoute forced, ExpansionRoute tag) {
    check_request(p, pt, m);
    if (p.gamma_pole())
        raise(errc::gamma_pole,
              "alpha + beta is a nonpositive integer; use the confluent form");

    ExpansionResult out;
    out.route = tag;
    out.n = pt.n;
    out.theta = pt.theta;
    out.low_confidence = pt.n < config::n_min;

    const double s = p.alpha + p.beta;
    const double x = double(pt.n) * pt.theta;
    const double nd = double(pt.n);

    if (pt.theta < config::theta_min) {
        // the jet recursion is ill-conditioned here; keep the closed-form
        // leading term, written through the entire pair so theta = 0 is exact
        out.m = 1;
        EntirePair e = t_entire_pair(p, x);
        cplx v = std::pow(nd, s - 1.0) * e.e1 * alpha0_closed(p, pt.theta) +
                 std::pow(nd, s - 2.0) * e.e2 * beta0_over_theta(p, pt.theta);
        out.t_used = TPair{e.e1, e.e2, TRoute::series};
        out.value = attach_radius(v, pt.n, pt.rho);
        return out;
    }

    CoeffTable tb = coeff_table(p, pt.theta, m);
    TPair tp = t_pair(p, x, forced);
    cplx a_sum = horner_in_inv_n(tb.alpha_k, m, pt.n);
    cplx b_sum = horner_in_inv_n(tb.beta_k, m, pt.n);
    cplx v = std::pow(pt.theta, 1.0 - s) * (tp.t1 * a_sum + tp.t2 * b_sum);

    out.m = m;
    out.t_used = tp;
    out.value = attach_radius(v, pt.n, pt.rho);
    return out;
}

} // namespace

const char* expansion_route_name(ExpansionRoute r) {
    switch (r) {
        case ExpansionRoute::t_form: return "tpair";
        case ExpansionRoute::kummer_form: return "kummer";
        case ExpansionRoute::bessel_form: return "bessel";
    }
    return "unknown";
}

ExpansionResult expand_t(const Params& p, const EvalPoint& pt, int m) {
    return expand_two_function(p, pt, m, TRoute::auto_route, ExpansionRoute::t_form);
}

ExpansionResult expand_bessel(double alpha, const EvalPoint& pt, int m) {
    if (alpha <= 0.0 && alpha == std::floor(alpha))
        raise(errc::gamma_pole, "Bessel form needs alpha away from nonpositive integers");
    return expand_two_function(Params{alpha, alpha}, pt, m, TRoute::bessel,
                               ExpansionRoute::bessel_form);
}

ExpansionResult expand_kummer(const Params& p, const EvalPoint& pt, int m) {
    check_request(p, pt, m);

    ExpansionResult out;
    out.route = ExpansionRoute::kummer_form;
    out.n = pt.n;
    out.theta = pt.theta;
    out.low_confidence = pt.n < config::n_min;

    const double s = p.alpha + p.beta;
    const double x = double(pt.n) * pt.theta;
    const double nd = double(pt.n);

    if (p.trivial_vanishing()) {
        // both parameters nonpositive integers: every c_k, d_k vanishes and
        // the polynomials themselves are zero once n exceeds |alpha| + |beta|
        out.m = m;
        out.value = ScaledComplex{cplx{0.0, 0.0}, 0.0};
        return out;
    }

    cplx c_sum, d_sum;
    if (pt.theta < config::theta_min) {
        out.m = 1;
        double rg = rgamma(s);
        cplx b0 = pt.theta * beta0_over_theta(p, pt.theta);
        c_sum = (alpha0_closed(p, pt.theta) + I * b0) * rg;
        d_sum = -2.0 * I * b0 * rg;
    } else {
        CoeffTable tb = coeff_table(p, pt.theta, m);
        out.m = m;
        c_sum = horner_in_inv_n(tb.c_k, m, pt.n);
        d_sum = horner_in_inv_n(tb.d_k, m, pt.n);
    }

    const cplx z{0.0, -2.0 * x};
    cplx mm = kummer_m(p.alpha, s, z);
    cplx md = kummer_m_derivative(p.alpha, s, z);
    out.t_used = TPair{mm, md, TRoute::kummer};

    cplx v = std::pow(nd, s - 1.0) * unit_phase(pt.n, pt.theta) * (mm * c_sum + md * d_sum);
    out.value = attach_radius(v, pt.n, pt.rho);
    return out;
}

ErrorProfile error_profile(const Params& p, const std::vector<long>& n_grid,
                           const std::vector<double>& theta_grid, int m) {
    if (n_grid.empty() || theta_grid.empty())
        raise(errc::param_out_of_range, "error profile needs nonempty grids");

    ErrorProfile out;
    out.n_grid = n_grid;
    out.theta_grid = theta_grid;
    out.m = m;
    out.abs_err.assign(theta_grid.size(), {});
    out.rel_err.assign(theta_grid.size(), {});
    out.bound_ratio.assign(theta_grid.size(), {});
    out.slopes.assign(theta_grid.size(), 0.0);

    const double s = p.alpha + p.beta;

    for (size_t ti = 0; ti < theta_grid.size(); ++ti) {
        double theta = theta_grid[ti];
        std::vector<double> log_n, log_norm;
        for (long n : n_grid) {
            cplx exact = eval_exact(p, n, theta);
            ExpansionResult r = expand_t(p, EvalPoint{n, 1.0, theta}, m);
            double err = std::abs(r.value.value() - exact);
            // bound denominator from the raw T pair at x = n theta; valid for
            // every theta > 0 even when the expansion took the fused branch
            TPair tp = t_pair(p, double(n) * theta);
            double den = std::pow(theta, 1.0 - s) * (std::abs(tp.t1) + std::abs(tp.t2));
            double norm = err / den;

            out.abs_err[ti].push_back(err);
            out.rel_err[ti].push_back(err / std::max(1e-300, std::abs(exact)));
            double br = norm * std::pow(double(n), double(m));
            out.bound_ratio[ti].push_back(br);
            out.max_bound_ratio = std::max(out.max_bound_ratio, br);

            if (norm > 0.0 && std::isfinite(norm)) {
                log_n.push_back(std::log(double(n)));
                log_norm.push_back(std::log(norm));
            }
        }
        // least-squares slope of log(normalized error) vs log n
        size_t k = log_n.size();
        if (k >= 2) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (size_t j = 0; j < k; ++j) {
                sx += log_n[j];
                sy += log_norm[j];
                sxx += log_n[j] * log_n[j];
                sxy += log_n[j] * log_norm[j];
            }
            out.slopes[ti] = (double(k) * sxy - sx * sy) / (double(k) * sxx - sx * sx);
        } else {
            out.slopes[ti] = std::nan("");
        }
    }
    return out;
}

} // namespace heisen
