#pragma once

#include <heisen/types.hpp>

#include <vector>

namespace heisen {

// Zeros of the equal-parameter (Gegenbauer) polynomial on the angle interval
// (0, pi), with the two analytic predictions attached per index k:
//   estimates_bessel[k-1]  = j_{alpha-1/2, k} / (n + alpha)   (sharp, O(n^-3))
//   estimates_uniform[k-1] = (k + (alpha-1)/2) pi / (n + alpha) (uniform, weaker)
struct ZeroReport {
    double alpha = 0.0;
    long n = 0;
    std::vector<double> zeros;
    std::vector<double> estimates_bessel;
    std::vector<double> estimates_uniform;
    std::vector<double> discrepancies_bessel;
    std::vector<double> discrepancies_uniform;
};

// Sign-change bracketing on an 8n grid refined to 1e-12; one retry at 32n
// before raising ZeroCountMismatch. Requires alpha > -1/2, alpha != 0.
ZeroReport find_zeros(double alpha, long n);

// Decay check for the sharp estimate: e(n) = |theta_{n,k} - j/(n+alpha)|
// should shrink like n^-3, i.e. ratio ~ 8 when n doubles. alpha = 1 is exact
// to solver tolerance and flagged degenerate instead of being asserted.
struct ZeroOrderCheck {
    double alpha = 0.0;
    int k = 0;
    long n1 = 0, n2 = 0;
    double e1 = 0.0, e2 = 0.0;
    double ratio = 0.0;
    bool degenerate = false;
};

ZeroOrderCheck zero_order_check(double alpha, int k, long n1, long n2);

// Plain cosine approximation valid for n theta >> 1 (enforced >= 10);
// rel_band records the O(1/(n theta)) accuracy caveat.
struct CosineApprox {
    double value = 0.0;
    double rel_band = 0.0;
};

CosineApprox cosine_approx(double alpha, long n, double theta);

// No-positive-zeros scan for the first T-function: samples |T1| on a
// log-spaced grid over (0, x_max] and checks, via central differences, that
// Im[conj(I) I'] stays positive for I(x) = x^{1-(alpha+beta)/2} T1(x).
// Requires alpha != beta and alpha + beta > 0.
struct ScanReport {
    double x_max = 0.0;
    long grid = 0;
    double min_abs_t1 = 0.0;
    double x_at_min = 0.0;
    double min_im_quantity = 0.0;
    bool t1_nonvanishing = false;
    bool phase_monotone = false;
};

ScanReport prop1_scan(const Params& p, double x_max, long grid);

} // namespace heisen
