#pragma once

#include <heisen/jet.hpp>
#include <heisen/types.hpp>

#include <vector>

namespace heisen {

// The circle-asymptotics machinery tracks one analytic germ at each of the two
// branch points s = +i and s = -i of the mapped integrand. Both jets always
// carry the same truncation order; the order drops by exactly one per
// recursion round, which is what limits the table depth below.
struct HJetPair {
    Jet at_plus_i;
    Jet at_minus_i;
    int k = 0;       // recursion depth that produced this pair
    double theta = 0.0;
};

struct Decomposition {
    cplx alpha;      // even part of the pair values at the centers
    cplx beta;       // odd part
    HJetPair g;      // regular remainder, one order lower
};

// Coefficient table for the uniform expansions at a fixed angle.
//
// alpha_k/beta_k feed the two-function form, c_k/d_k the confluent form.
// Slot k = 0 of alpha_k/beta_k is overwritten with the closed-form values
// (they are exact and cheap); the raw jet-derived pair is kept alongside so
// consumers can cross-check the recursion against the closed forms.
struct CoeffTable {
    double theta = 0.0;
    int K = 0;
    std::vector<cplx> alpha_k, beta_k;
    std::vector<cplx> c_k, d_k;
    cplx alpha0_jet{0.0, 0.0};
    cplx beta0_jet{0.0, 0.0};
};

// Seed germ h_0 at both centers, truncated at config::jet_order.
// Requires theta in [config::theta_min, pi - config::cap_delta].
HJetPair build_h0(const Params& p, double theta);

// Split h into its value part (alpha + s beta at the centers) and the regular
// cofactor g with h = alpha + s beta + (s^2 + 1) g near each center.
Decomposition decompose_h(const HJetPair& h);

// One step of the derivative recursion: maps g_k to h_{k+1}. Needs at least
// one usable order on g; raises OrderExhausted otherwise.
HJetPair recurse_h(const HJetPair& g, const Params& p, double theta);

// Run the pipeline K rounds deep. K must stay within the jet budget
// (config::jet_order - config::jet_order_guard). Raises GammaPole when
// alpha + beta is a nonpositive integer, except for the degenerate
// polynomial-vanishing case where c_k and d_k are exactly zero.
CoeffTable coeff_table(const Params& p, double theta, int K);

// Closed forms for the leading pair. Stable down to theta = 0 (inclusive);
// beta0_over_theta carries the finite limit (alpha + beta)/2 at zero.
cplx alpha0_closed(const Params& p, double theta);
cplx beta0_closed(const Params& p, double theta);
cplx beta0_over_theta(const Params& p, double theta);

} // namespace heisen
