#pragma once

#include <heisen/coeffs.hpp>
#include <heisen/special.hpp>
#include <heisen/types.hpp>

#include <vector>

namespace heisen {

enum class ExpansionRoute { t_form, kummer_form, bessel_form };
const char* expansion_route_name(ExpansionRoute r);

// m-term uniform approximation of the polynomial at rho e^{i theta}.
//
// `value` carries rho^n in its decimal exponent so large-degree evaluations
// off the unit circle never overflow. `t_used` records the special-function
// pair that backed the evaluation: T1/T2 for the T and Bessel forms, M and M'
// for the confluent form, and the entire (normalized) pair on the small-angle
// branch. Below config::theta_min only the closed-form leading term is
// trusted, so `m` reports 1 there regardless of the request.
struct ExpansionResult {
    ScaledComplex value;
    int m = 0;
    ExpansionRoute route = ExpansionRoute::t_form;
    long n = 0;
    double theta = 0.0;
    TPair t_used{};
    bool low_confidence = false;  // n below config::n_min
};

ExpansionResult expand_t(const Params& p, const EvalPoint& pt, int m);
ExpansionResult expand_kummer(const Params& p, const EvalPoint& pt, int m);
ExpansionResult expand_bessel(double alpha, const EvalPoint& pt, int m);

// Empirical error study of the T-form expansion against exact evaluation.
// Matrices are indexed [theta][n]. bound_ratio divides the absolute error by
// theta^{1-alpha-beta} n^{-m} (|T1| + |T2|); its grid maximum is the
// empirical envelope constant for this m. slopes holds the per-theta
// least-squares slope of log(normalized error) against log n, which should
// sit near -m.
struct ErrorProfile {
    std::vector<long> n_grid;
    std::vector<double> theta_grid;
    int m = 0;
    std::vector<std::vector<double>> abs_err;
    std::vector<std::vector<double>> rel_err;
    std::vector<std::vector<double>> bound_ratio;
    std::vector<double> slopes;
    double max_bound_ratio = 0.0;
};

ErrorProfile error_profile(const Params& p, const std::vector<long>& n_grid,
                           const std::vector<double>& theta_grid, int m);

} // namespace heisen
