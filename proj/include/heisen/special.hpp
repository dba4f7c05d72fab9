// Special functions used across the library: real gamma machinery, the
// confluent hypergeometric function M(a,b,z) on and near the imaginary axis,
// Bessel J of real order with its positive zeros, and the oscillatory kernel
// pair (T1, T2) that drives the asymptotic expansions.
#pragma once

#include <heisen/types.hpp>

namespace heisen {

// Gamma on the real line (Lanczos approximation, reflection for x < 0.5).
// Raises GammaPole at nonpositive integers.
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// log |f| together with sign(f) in {-1, 0, +1}.
struct SignedLog {
    double log = 0.0;
    int sign = 1;
};

// Valid at any non-pole real x, negative arguments via reflection.
SignedLog log_gamma_signed(double x);

// 1/Gamma(x); entire, returns exact 0.0 at nonpositive integers.
double rgamma(double x);

// Rising factorial (a)_k = a(a+1)...(a+k-1) as a signed logarithm. Handles
// zero factors (sign 0) and nonpositive-integer a.
SignedLog pochhammer_signed(double a, long k);

// Kummer's M(a,b,z). Maclaurin series in compensated (double-double)
// arithmetic up to |z| = 26, large-|z| asymptotic beyond, truncated at the
// smallest term. Raises BPole for nonpositive-integer b and NonConvergence if
// neither branch can reach ~1e-6.
cplx kummer_m(double a, double b, cplx z);

// dM/dz = (a/b) M(a+1, b+1, z).
cplx kummer_m_derivative(double a, double b, cplx z);

// Bessel J_nu(x) for any real order and x >= 0. Power series (compensated)
// below x = 12, Hankel asymptotic beyond; negative integer orders by
// reflection. Intended for moderate orders, |nu| <= ~6.
double bessel_j(double nu, double x);

// k-th positive zero of J_nu, nu > -1, k >= 1. McMahon estimate, bracketed
// bisection, Newton polish; verified residual <= 1e-10.
double bessel_zero(double nu, int k);

enum class TRoute { auto_route, series, kummer, bessel };

const char* route_name(TRoute r);

struct TPair {
    cplx t1{0.0, 0.0};
    cplx t2{0.0, 0.0};
    TRoute route_used = TRoute::series;
};

// The kernel pair at x > 0 (T2 = T1'). Routes:
//   series  power series in x, compensated; usable to x ~ 60, guarded at 500
//           terms (SeriesDivergenceGuard)
//   kummer  T1 = x^{a+b-1} e^{ix} M(alpha, a+b, -2ix) / Gamma(a+b)
//   bessel  alpha = beta only: T1,T2 real multiples of J_{alpha -+ 1/2}(x)
// auto_route: bessel when alpha = beta (away from Gamma(alpha) poles),
// otherwise series for x <= 13 and kummer beyond. The kummer route needs
// 1/Gamma(alpha+beta) != 0 and raises GammaPole when alpha+beta is a
// nonpositive integer.
TPair t_pair(const Params& p, double x, TRoute route = TRoute::auto_route);

// Entire rescalings used when the expansion argument approaches 0:
//   E1(x) = x^{1-a-b} T1(x),  E2(x) = x^{2-a-b} T2(x)
// both extend analytically through x = 0 with
//   E1(0) = 1/Gamma(a+b),  E2(0) = (a+b-1)/Gamma(a+b).
struct EntirePair {
    cplx e1{0.0, 0.0};
    cplx e2{0.0, 0.0};
};

EntirePair t_entire_pair(const Params& p, double x);

}  // namespace heisen
