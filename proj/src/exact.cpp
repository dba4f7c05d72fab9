#include <heisen/exact.hpp>
#include <heisen/special.hpp>

#include <cmath>

namespace heisen {

namespace {

void check_degree(long n) {
    if (n < 0) raise(errc::param_out_of_range, "degree must be >= 0");
    if (n > config::max_degree) raise(errc::degree_too_large, "degree above configured max");
}

// t_j = (alpha)_j (beta)_{n-j} / (j! (n-j)!), rebuilt from scratch
double term_from_logs(const Params& p, long n, long j) {
    SignedLog a = pochhammer_signed(p.alpha, j);
    SignedLog b = pochhammer_signed(p.beta, n - j);
    if (a.sign == 0 || b.sign == 0) return 0.0;
    double lg = a.log + b.log - log_gamma(j + 1.0) - log_gamma(n - j + 1.0);
    return a.sign * b.sign * std::exp(lg);
}

cplx eval_reduced(const Params& p, long n, double theta) {
    KahanC sum;
    double t = term_from_logs(p, n, 0);  // (beta)_n / n!
    for (long j = 0; j <= n; ++j) {
        if (j > 0) {
            double den = p.beta + static_cast<double>(n - j);  // beta + n - j
            if (t == 0.0 || den == 0.0) {
                t = term_from_logs(p, n, j);
            } else {
                t *= (p.alpha + static_cast<double>(j - 1)) *
                     static_cast<double>(n - j + 1) / (static_cast<double>(j) * den);
            }
        }
        if (t != 0.0) {
            double ang = static_cast<double>(n - 2 * j) * theta;
            sum.add(t * cplx{std::cos(ang), std::sin(ang)});
        }
    }
    return sum.get();
}

}  // namespace

cplx eval_exact(const Params& p, long n, double theta) {
    p.validate();
    check_degree(n);
    if (!std::isfinite(theta)) raise(errc::nonfinite_input, "theta");
    double th = std::remainder(theta, 2.0 * M_PI);  // [-pi, pi]
    if (th < 0.0) return eval_reduced(p.swapped(), n, -th);
    return eval_reduced(p, n, th);
}

std::vector<cplx> eval_via_generating_recurrence(const Params& p, long n_max,
                                                 double theta) {
    p.validate();
    check_degree(n_max);
    if (!std::isfinite(theta)) raise(errc::nonfinite_input, "theta");

    // u_j = (alpha)_j e^{-ij theta} / j!,  v_k = (beta)_k e^{ik theta} / k!
    cplx em = std::polar(1.0, -theta);
    cplx ep = std::conj(em);
    std::vector<cplx> u(n_max + 1), v(n_max + 1);
    u[0] = v[0] = 1.0;
    for (long j = 0; j + 1 <= n_max; ++j) {
        double d = static_cast<double>(j + 1);
        u[j + 1] = u[j] * ((p.alpha + static_cast<double>(j)) / d) * em;
        v[j + 1] = v[j] * ((p.beta + static_cast<double>(j)) / d) * ep;
    }
    std::vector<cplx> out(n_max + 1);
    for (long m = 0; m <= n_max; ++m) {
        KahanC s;
        for (long j = 0; j <= m; ++j) s.add(u[j] * v[m - j]);
        out[m] = s.get();
    }
    return out;
}

double gegenbauer_oracle(double alpha, long n, double x) {
    if (!(alpha > -0.5) || alpha == 0.0)
        raise(errc::param_out_of_range, "Gegenbauer recurrence needs alpha > -1/2, alpha != 0");
    if (!(x >= -1.0 && x <= 1.0))
        raise(errc::param_out_of_range, "Gegenbauer argument must lie in [-1, 1]");
    check_degree(n);
    if (n == 0) return 1.0;
    double cm = 1.0, cc = 2.0 * alpha * x;
    for (long k = 2; k <= n; ++k) {
        double cn = (2.0 * x * (static_cast<double>(k) + alpha - 1.0) * cc -
                     (static_cast<double>(k) + 2.0 * alpha - 2.0) * cm) /
                    static_cast<double>(k);
        cm = cc;
        cc = cn;
    }
    return cc;
}

ScaledComplex assemble_at_rho(cplx unit_value, long n, double rho) {
    check_degree(n);
    if (!(rho > 0.0) || !std::isfinite(rho))
        raise(errc::param_out_of_range, "rho must be positive and finite");
    return {unit_value, static_cast<double>(n) * std::log10(rho)};
}

}  // namespace heisen
