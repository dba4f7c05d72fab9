// Ground-truth evaluation of the polynomial family by direct summation of the
// defining series, plus independent oracles (generating-function convolution,
// Gegenbauer recurrence) used to cross-check it.
#pragma once

#include <heisen/types.hpp>

#include <vector>

namespace heisen {

// Value of C_n at e^{i theta} (unit circle; radius is handled separately by
// assemble_at_rho). theta is first reduced to [0, pi] using the exact
// conjugate-swap symmetry C(alpha,beta; -theta) = C(beta,alpha; theta).
// Terms are generated by a running ratio with log-gamma reseeding across zero
// terms/denominators; accumulation is compensated.
cplx eval_exact(const Params& p, long n, double theta);

// C_0 .. C_{n_max} via the Cauchy product of the two binomial series of the
// generating function. Independent of eval_exact; intended as an oracle at
// desk scale (cost is O(n_max^2)).
std::vector<cplx> eval_via_generating_recurrence(const Params& p, long n_max,
                                                 double theta);

// Gegenbauer C_n^{(alpha)}(x) by the classical three-term recurrence.
// Requires alpha > -1/2, alpha != 0, |x| <= 1.
double gegenbauer_oracle(double alpha, long n, double x);

// Reapply the homogeneity factor rho^n as a carried decimal exponent. The
// mantissa is the unit-circle value, untouched, so the identity
// value(rho) = rho^n * value(1) holds by construction.
ScaledComplex assemble_at_rho(cplx unit_value, long n, double rho);

}  // namespace heisen
