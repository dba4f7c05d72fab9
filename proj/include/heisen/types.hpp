// Shared types, error codes, and numeric configuration for the heisen library.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace heisen {

using cplx = std::complex<double>;

enum class errc {
    ok = 0,
    nonfinite_input,
    param_out_of_range,
    theta_out_of_range,
    degree_too_large,
    center_mismatch,
    division_by_near_zero,
    cancellation_failure,
    order_exhausted,
    gamma_pole,
    b_pole,
    non_convergence,
    series_divergence,
    term_count_exceeds_table,
    zero_count_mismatch,
    argument_too_small,
    precondition_violation,
    internal_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc c, const std::string& what) {
    throw Error(c, std::string(errc_name(c)) + ": " + what);
}

namespace config {
// Jet/coefficient machinery. Each recursion step consumes one jet order,
// so producing K coefficients needs order >= K + guard.
inline constexpr int jet_order = 24;
inline constexpr int jet_order_guard = 8;
inline constexpr int default_terms = 4;         // K: coefficients per table
inline constexpr double jet_div_tol = 1e-13;    // divisor constant-term floor
inline constexpr double jet_cancel_tol = 1e-8;  // monomial-division residue cap

// Expansion domain.
inline constexpr double theta_min = 1e-2;  // below: closed-form k=0 only
inline constexpr double cap_delta = 0.1;   // theta <= pi - cap_delta
inline constexpr long n_min = 5;           // below: tagged low-confidence
inline constexpr long max_degree = 1000000;

// T-function routing. The power-series route loses ~e^x * eps to cancellation,
// the Kummer large-|z| route is optimal-truncation limited; in doubles the
// crossover sits near x ~ 13 (|z| = 2x ~ 26), not at the nominal 30/40.
inline constexpr double x_series_max = 13.0;
inline constexpr double z_switch = 20.0;
inline constexpr int series_max_terms = 500;
inline constexpr int kummer_max_terms = 1200;
inline constexpr int kummer_tail_run = 10;
inline constexpr double kummer_error_cap = 1e-6;

// Bessel.
inline constexpr double bessel_x_switch = 12.0;
inline constexpr double bessel_zero_residual = 1e-10;
inline constexpr int bessel_newton_max = 50;

// Zero finding on (0, pi).
inline constexpr int zero_grid_per_root = 8;
inline constexpr int zero_grid_retry_factor = 4;
inline constexpr double zero_theta_tol = 1e-12;

// T1 positivity scan.
inline constexpr double scan_fd_step = 1e-5;  // relative central-difference step
}  // namespace config

// Parameter pair (alpha, beta) of the polynomial family.
struct Params {
    double alpha = 0.0;
    double beta = 0.0;

    void validate() const {
        if (!std::isfinite(alpha) || !std::isfinite(beta))
            raise(errc::nonfinite_input, "alpha/beta must be finite");
    }

    // alpha+beta at a nonpositive integer: 1/Gamma(alpha+beta) vanishes and the
    // Kummer-form expansion degenerates.
    bool gamma_pole() const {
        double s = alpha + beta;
        return s <= 0.0 && s == std::floor(s);
    }

    // Both parameters nonpositive integers: the polynomials themselves vanish
    // identically for large n and all-zero expansion coefficients are exact.
    bool trivial_vanishing() const {
        return alpha <= 0.0 && alpha == std::floor(alpha) &&
               beta <= 0.0 && beta == std::floor(beta);
    }

    Params swapped() const { return Params{beta, alpha}; }
};

// Evaluation point z = rho * e^{i theta} together with the degree.
struct EvalPoint {
    long n = 0;
    double rho = 1.0;
    double theta = 0.0;

    void validate() const {
        if (n < 0) raise(errc::param_out_of_range, "degree must be >= 0");
        if (!(rho > 0.0) || !std::isfinite(rho))
            raise(errc::param_out_of_range, "rho must be positive and finite");
        if (!std::isfinite(theta)) raise(errc::nonfinite_input, "theta must be finite");
    }
};

// Complex value carried as mantissa * 10^exp10 so that rho^n and similar
// factors survive far outside double range. Mantissa is kept in [1, 10).
struct ScaledComplex {
    cplx mant{0.0, 0.0};
    double exp10 = 0.0;

    static ScaledComplex from(cplx z) {
        ScaledComplex s{z, 0.0};
        s.normalize();
        return s;
    }

    void normalize() {
        double a = std::abs(mant);
        if (a == 0.0 || !std::isfinite(a)) {
            exp10 = 0.0;
            return;
        }
        double e = std::floor(std::log10(a));
        mant *= std::pow(10.0, -e);
        exp10 += e;
        // guard against log10 edge rounding
        if (std::abs(mant) >= 10.0) { mant /= 10.0; exp10 += 1.0; }
        if (std::abs(mant) < 1.0) { mant *= 10.0; exp10 -= 1.0; }
    }

    void mul(cplx w) {
        mant *= w;
        normalize();
    }

    // multiply by base^power without leaving log space
    void mul_pow(double base, double power) {
        if (base <= 0.0) raise(errc::param_out_of_range, "scaled power base must be > 0");
        exp10 += power * std::log10(base);
        double frac = exp10 - std::floor(exp10);
        mant *= std::pow(10.0, frac);
        exp10 = std::floor(exp10);
        normalize();
    }

    cplx value() const { return mant * std::pow(10.0, exp10); }
    double abs_log10() const {
        double a = std::abs(mant);
        return a == 0.0 ? -INFINITY : std::log10(a) + exp10;
    }
};

inline const char* errc_name_impl(errc c) {
    switch (c) {
        case errc::ok: return "ok";
        case errc::nonfinite_input: return "NonFiniteInput";
        case errc::param_out_of_range: return "ParamOutOfRange";
        case errc::theta_out_of_range: return "ThetaOutOfRange";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::center_mismatch: return "CenterMismatch";
        case errc::division_by_near_zero: return "DivisionByNearZero";
        case errc::cancellation_failure: return "CancellationFailure";
        case errc::order_exhausted: return "OrderExhausted";
        case errc::gamma_pole: return "GammaPole";
        case errc::b_pole: return "BPole";
        case errc::non_convergence: return "NonConvergence";
        case errc::series_divergence: return "SeriesDivergenceGuard";
        case errc::term_count_exceeds_table: return "TermCountExceedsTable";
        case errc::zero_count_mismatch: return "ZeroCountMismatch";
        case errc::argument_too_small: return "ArgumentTooSmall";
        case errc::precondition_violation: return "PreconditionViolation";
        case errc::internal_error: return "InternalError";
    }
    return "unknown";
}

inline const char* errc_name(errc c) { return errc_name_impl(c); }

// Compensated (Neumaier) accumulation for long sums.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double get() const { return sum + comp; }
};

struct KahanC {
    Kahan re, im;
    void add(cplx z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cplx get() const { return {re.get(), im.get()}; }
};

}  // namespace heisen
