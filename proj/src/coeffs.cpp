#include <heisen/coeffs.hpp>

#include <heisen/special.hpp>

#include <cmath>
#include <complex>

namespace heisen {

namespace {

const cplx I{0.0, 1.0};

void check_theta_window(double theta) {
    if (!(theta >= config::theta_min && theta <= M_PI - config::cap_delta))
        raise(errc::theta_out_of_range, "theta must lie in [theta_min, pi - cap_delta]");
}

// log(sin(theta)/theta), real on [0, pi); series below 1e-3 where the direct
// quotient loses digits to the 1 - O(theta^2) plateau
double log_sinc(double theta) {
    if (theta < 1e-3) {
        double t2 = theta * theta;
        return -t2 / 6.0 - t2 * t2 / 180.0 - t2 * t2 * t2 / 2835.0;
    }
    return std::log(std::sin(theta) / theta);
}

cplx sinhc(cplx h) {
    if (std::abs(h) < 1e-4) {
        cplx h2 = h * h;
        return 1.0 + h2 / 6.0 * (1.0 + h2 / 20.0);
    }
    return std::sinh(h) / h;
}

// The leading pair is a half-sum / half-difference of
//   f_plus  = exp(g_plus),  g_plus  =  i theta alpha - alpha log(sin th / th)
//   f_minus = exp(g_minus), g_minus = -i theta beta  - beta  log(sin th / th)
// Working with mean and half-difference of the exponents keeps the difference
// side (beta0) fully conditioned as theta -> 0, where f_plus ~ f_minus.
struct ExponentSplit {
    cplx mean;
    cplx half_diff_over_theta;  // finite at theta = 0
};

ExponentSplit split_exponents(const Params& p, double theta) {
    double lot = (theta == 0.0) ? 0.0 : log_sinc(theta) / theta;
    double l = lot * theta;
    ExponentSplit e;
    e.mean = 0.5 * (I * theta * (p.alpha - p.beta) - (p.alpha + p.beta) * l);
    e.half_diff_over_theta = 0.5 * (I * (p.alpha + p.beta) + (p.beta - p.alpha) * lot);
    return e;
}

} // namespace

cplx alpha0_closed(const Params& p, double theta) {
    p.validate();
    if (theta == 0.0) return cplx{1.0, 0.0};
    ExponentSplit e = split_exponents(p, theta);
    return std::exp(e.mean) * std::cosh(theta * e.half_diff_over_theta);
}

cplx beta0_over_theta(const Params& p, double theta) {
    p.validate();
    ExponentSplit e = split_exponents(p, theta);
    cplx h = theta * e.half_diff_over_theta;
    return std::exp(e.mean) * sinhc(h) * e.half_diff_over_theta / I;
}

cplx beta0_closed(const Params& p, double theta) {
    return theta * beta0_over_theta(p, theta);
}

HJetPair build_h0(const Params& p, double theta) {
    p.validate();
    check_theta_window(theta);

    // one spare order: the removable-singularity division costs one
    const int M = config::jet_order + 1;
    const cplx eip = std::exp(I * theta);   // e^{ i theta}
    const cplx eim = std::exp(-I * theta);  // e^{-i theta}
    const cplx front = std::exp(I * theta * (p.alpha - p.beta));

    HJetPair out;
    out.k = 0;
    out.theta = theta;

    {
        // germ at s = +i, local variable u = s - i
        Jet s = Jet::variable(I, M);
        Jet e_ts = exp(s * (-theta));  // e^{-theta s}
        Jet b_plus = (eip - e_ts).div((s + I) * theta);
        // (e^{-i theta} - e^{-theta s}) / ((s - i) theta) has a removable zero
        // here; factor e^{-i theta} out and expand (1 - e^{-w})/w in w = theta u
        Jet w = (s - I) * theta;
        Jet b_minus = (cplx{1.0, 0.0} - exp(-w)).divide_by_monomial() * (eim / theta);
        out.at_plus_i =
            (front * pow_real(b_plus, -p.alpha) * pow_real(b_minus, -p.beta))
                .truncated(config::jet_order);
    }
    {
        // mirrored germ at s = -i, local variable u = s + i
        Jet s = Jet::variable(-I, M);
        Jet e_ts = exp(s * (-theta));
        Jet b_minus = (eim - e_ts).div((s - I) * theta);
        Jet w = (s + I) * theta;
        Jet b_plus = (cplx{1.0, 0.0} - exp(-w)).divide_by_monomial() * (eip / theta);
        out.at_minus_i =
            (front * pow_real(b_plus, -p.alpha) * pow_real(b_minus, -p.beta))
                .truncated(config::jet_order);
    }
    return out;
}

Decomposition decompose_h(const HJetPair& h) {
    const cplx hp = h.at_plus_i.value();
    const cplx hm = h.at_minus_i.value();

    Decomposition d;
    d.alpha = 0.5 * (hp + hm);
    d.beta = (hp - hm) / (2.0 * I);

    // remainder (h - alpha - s beta) vanishes to first order at both centers;
    // peel u = s -+ i, then divide by the regular cofactor of s^2 + 1
    Jet s_p = Jet::variable(I, h.at_plus_i.order());
    Jet s_m = Jet::variable(-I, h.at_minus_i.order());
    Jet g_p = (h.at_plus_i - (d.alpha + s_p * d.beta)).divide_by_monomial().div(s_p + I);
    Jet g_m = (h.at_minus_i - (d.alpha + s_m * d.beta)).divide_by_monomial().div(s_m - I);

    d.g = HJetPair{std::move(g_p), std::move(g_m), h.k, h.theta};
    return d;
}

HJetPair recurse_h(const HJetPair& g, const Params& p, double theta) {
    if (g.at_plus_i.order() < 1 || g.at_minus_i.order() < 1)
        raise(errc::order_exhausted, "jet order exhausted; lower the table depth");

    const cplx ca{p.alpha - 1.0, 0.0};
    const cplx cb{p.beta - 1.0, 0.0};

    HJetPair out;
    out.k = g.k + 1;
    out.theta = theta;

    {
        // at +i: (s - i) = u, (s + i) = u + 2i, (s^2 + 1) = u (u + 2i)
        const Jet& gp = g.at_plus_i;
        Jet spi = Jet::variable(I, gp.order()) + I;
        Jet a_term = gp.mul_by_monomial() * ca;
        Jet b_term = (gp * spi) * cb;
        Jet d_term = gp.derivative().mul_by_monomial() * spi;
        out.at_plus_i = (a_term + b_term - d_term) * (1.0 / theta);
    }
    {
        // at -i: (s + i) = u, (s - i) = u - 2i, (s^2 + 1) = u (u - 2i)
        const Jet& gm = g.at_minus_i;
        Jet smi = Jet::variable(-I, gm.order()) - I;
        Jet a_term = (gm * smi) * ca;
        Jet b_term = gm.mul_by_monomial() * cb;
        Jet d_term = gm.derivative().mul_by_monomial() * smi;
        out.at_minus_i = (a_term + b_term - d_term) * (1.0 / theta);
    }
    return out;
}

CoeffTable coeff_table(const Params& p, double theta, int K) {
    p.validate();
    if (K < 1) raise(errc::param_out_of_range, "table depth K must be at least 1");
    if (K > config::jet_order - config::jet_order_guard)
        raise(errc::term_count_exceeds_table, "table depth K exceeds the jet budget");
    check_theta_window(theta);
    const bool vanishing = p.trivial_vanishing();
    if (p.gamma_pole() && !vanishing)
        raise(errc::gamma_pole,
              "alpha + beta is a nonpositive integer; confluent-side coefficients diverge");

    CoeffTable t;
    t.theta = theta;
    t.K = K;
    t.alpha_k.reserve(K);
    t.beta_k.reserve(K);

    HJetPair h = build_h0(p, theta);
    for (int k = 0; k < K; ++k) {
        Decomposition d = decompose_h(h);
        t.alpha_k.push_back(d.alpha);
        t.beta_k.push_back(d.beta);
        if (k + 1 < K) h = recurse_h(d.g, p, theta);
    }
    t.alpha0_jet = t.alpha_k[0];
    t.beta0_jet = t.beta_k[0];
    // the leading slot has exact closed forms; prefer them
    t.alpha_k[0] = alpha0_closed(p, theta);
    t.beta_k[0] = beta0_closed(p, theta);

    const double s = p.alpha + p.beta;
    const double rg = vanishing ? 0.0 : rgamma(s);
    const double rg1 = vanishing ? 0.0 : rgamma(s - 1.0);
    t.c_k.reserve(K);
    t.d_k.reserve(K);
    for (int k = 0; k < K; ++k) {
        cplx prev = (k == 0) ? cplx{0.0, 0.0} : t.beta_k[k - 1];
        t.c_k.push_back((t.alpha_k[k] + I * t.beta_k[k]) * rg + (prev / theta) * rg1);
        t.d_k.push_back(-2.0 * I * t.beta_k[k] * rg);
    }
    return t;
}

} // namespace heisen
