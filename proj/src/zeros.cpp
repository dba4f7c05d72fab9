#include <heisen/zeros.hpp>

#include <heisen/exact.hpp>
#include <heisen/special.hpp>

#include <cmath>
#include <complex>

namespace heisen {

namespace {

double poly_on_circle(double alpha, long n, double theta) {
    return eval_exact(Params{alpha, alpha}, n, theta).real();
}

// bisection with secant acceleration inside a sign-change bracket
double refine_zero(double alpha, long n, double lo, double hi, double flo, double fhi) {
    for (int it = 0; it < 200 && hi - lo > config::zero_theta_tol; ++it) {
        double mid = 0.5 * (lo + hi);
        if (fhi != flo) {
            double sec = lo - flo * (hi - lo) / (fhi - flo);
            double margin = 0.1 * (hi - lo);
            if (sec > lo + margin && sec < hi - margin) mid = sec;
        }
        double fmid = poly_on_circle(alpha, n, mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) != (fmid < 0.0)) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> scan_for_zeros(double alpha, long n, long grid_points) {
    std::vector<double> zeros;
    double prev_theta = M_PI / double(grid_points + 1);
    double prev_f = poly_on_circle(alpha, n, prev_theta);
    for (long i = 2; i <= grid_points; ++i) {
        double theta = M_PI * double(i) / double(grid_points + 1);
        double f = poly_on_circle(alpha, n, theta);
        if (prev_f == 0.0) {
            zeros.push_back(prev_theta);
        } else if (f != 0.0 && (prev_f < 0.0) != (f < 0.0)) {
            zeros.push_back(refine_zero(alpha, n, prev_theta, theta, prev_f, f));
        }
        prev_theta = theta;
        prev_f = f;
    }
    if (prev_f == 0.0) zeros.push_back(prev_theta);
    return zeros;
}

} // namespace

ZeroReport find_zeros(double alpha, long n) {
    if (!(alpha > -0.5) || alpha == 0.0)
        raise(errc::param_out_of_range, "zero search needs alpha > -1/2 and alpha != 0");
    if (n < 1) raise(errc::param_out_of_range, "zero search needs n >= 1");

    std::vector<double> zeros = scan_for_zeros(alpha, n, config::zero_grid_per_root * n);
    if (long(zeros.size()) != n)
        zeros = scan_for_zeros(
            alpha, n, config::zero_grid_per_root * config::zero_grid_retry_factor * n);
    if (long(zeros.size()) != n)
        raise(errc::zero_count_mismatch, "grid scan did not isolate n zeros");

    ZeroReport r;
    r.alpha = alpha;
    r.n = n;
    r.zeros = std::move(zeros);
    double shift = double(n) + alpha;
    for (long k = 1; k <= n; ++k) {
        double eb = bessel_zero(alpha - 0.5, int(k)) / shift;
        double eu = (double(k) + (alpha - 1.0) / 2.0) * M_PI / shift;
        r.estimates_bessel.push_back(eb);
        r.estimates_uniform.push_back(eu);
        r.discrepancies_bessel.push_back(r.zeros[k - 1] - eb);
        r.discrepancies_uniform.push_back(r.zeros[k - 1] - eu);
    }
    return r;
}

ZeroOrderCheck zero_order_check(double alpha, int k, long n1, long n2) {
    if (k < 1 || k > 5) raise(errc::param_out_of_range, "order check wants 1 <= k <= 5");
    if (n1 < k || n2 <= n1) raise(errc::param_out_of_range, "order check wants k <= n1 < n2");

    ZeroOrderCheck c;
    c.alpha = alpha;
    c.k = k;
    c.n1 = n1;
    c.n2 = n2;
    c.degenerate = alpha == 1.0;

    double j = bessel_zero(alpha - 0.5, k);
    c.e1 = std::abs(find_zeros(alpha, n1).zeros[k - 1] - j / (double(n1) + alpha));
    c.e2 = std::abs(find_zeros(alpha, n2).zeros[k - 1] - j / (double(n2) + alpha));
    c.ratio = c.e1 / c.e2;
    return c;
}

CosineApprox cosine_approx(double alpha, long n, double theta) {
    if (!(alpha > -0.5) || alpha == 0.0)
        raise(errc::param_out_of_range, "cosine approximation needs alpha > -1/2, alpha != 0");
    if (!(theta > 0.0) || theta > M_PI - config::cap_delta)
        raise(errc::theta_out_of_range, "cosine approximation needs theta in (0, pi - cap_delta]");
    double x = double(n) * theta;
    if (x < 10.0)
        raise(errc::argument_too_small, "cosine approximation needs n theta >= 10");

    CosineApprox c;
    c.value = rgamma(alpha) * std::pow(theta, -alpha) *
              std::pow(double(n) / 2.0, alpha - 1.0) *
              std::pow(std::sin(theta) / theta, -alpha) *
              std::cos((double(n) + alpha) * theta - alpha * M_PI / 2.0);
    c.rel_band = 1.0 / x;
    return c;
}

ScanReport prop1_scan(const Params& p, double x_max, long grid) {
    p.validate();
    if (p.alpha == p.beta)
        raise(errc::precondition_violation,
              "equal parameters reduce to an oscillatory Bessel pair with real zeros");
    if (!(p.alpha + p.beta > 0.0))
        raise(errc::precondition_violation, "scan needs alpha + beta > 0");
    if (!(x_max > 0.0) || grid < 2)
        raise(errc::param_out_of_range, "scan needs x_max > 0 and at least 2 grid points");

    const double s = p.alpha + p.beta;
    const double x_lo = x_max * 1e-4;
    const double ratio = std::log(x_max / x_lo);

    auto eye = [&](double x) -> cplx {
        return std::pow(x, 1.0 - s / 2.0) * t_pair(p, x).t1;
    };

    ScanReport r;
    r.x_max = x_max;
    r.grid = grid;
    r.min_abs_t1 = INFINITY;
    r.min_im_quantity = INFINITY;

    for (long i = 0; i < grid; ++i) {
        double x = x_lo * std::exp(ratio * double(i) / double(grid - 1));
        double a = std::abs(t_pair(p, x).t1);
        if (a < r.min_abs_t1) {
            r.min_abs_t1 = a;
            r.x_at_min = x;
        }
        double h = config::scan_fd_step * x;
        cplx di = (eye(x + h) - eye(x - h)) / (2.0 * h);
        double im = std::imag(std::conj(eye(x)) * di);
        r.min_im_quantity = std::min(r.min_im_quantity, im);
    }
    r.t1_nonvanishing = r.min_abs_t1 > 0.0;
    r.phase_monotone = r.min_im_quantity > 0.0;
    return r;
}

} // namespace heisen
