#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <heisen.h>

#include <heisen/exact.hpp>
#include <heisen/expansion.hpp>
#include <heisen/special.hpp>

#include <cmath>
#include <complex>
#include <cstring>
#include <string>

TEST_CASE("version and status names") {
    CHECK(std::string(heisen_version()) == "0.1.0");
    CHECK(std::string(heisen_status_name(HEISEN_OK)) == "Ok");
    CHECK(std::string(heisen_status_name(HEISEN_ERR_GAMMA_POLE)) == "GammaPole");
    CHECK(std::string(heisen_status_name(HEISEN_ERR_SERIES_DIVERGENCE)) ==
          "SeriesDivergenceGuard");
}

TEST_CASE("exact evaluation round-trips through the C boundary") {
    heisen_complex m{};
    double e10 = -1.0;
    REQUIRE(heisen_eval_exact(0.3, 0.9, 17, 1.0, 0.7, &m, &e10) == HEISEN_OK);
    heisen::cplx want = heisen::eval_exact(heisen::Params{0.3, 0.9}, 17, 0.7);
    CHECK(m.re == want.real());
    CHECK(m.im == want.imag());
    CHECK(e10 == 0.0);

    // off the unit circle only the exponent moves
    heisen_complex m2{};
    double e2 = 0.0;
    REQUIRE(heisen_eval_exact(0.3, 0.9, 17, 2.5, 0.7, &m2, &e2) == HEISEN_OK);
    CHECK(m2.re == m.re);
    CHECK(m2.im == m.im);
    CHECK(std::abs(e2 - 17.0 * std::log10(2.5)) < 1e-12);
}

TEST_CASE("failures set a code and a thread-local message") {
    heisen_complex m{};
    double e10 = 0.0;
    heisen_status s = heisen_eval_exact(0.3, 0.9, -1, 1.0, 0.7, &m, &e10);
    CHECK(s == HEISEN_ERR_PARAM_OUT_OF_RANGE);
    CHECK(std::strlen(heisen_last_error()) > 0);

    heisen_complex t1{}, t2{};
    s = heisen_t_pair(0.5, -2.5, 1.0, HEISEN_ROUTE_KUMMER, &t1, &t2, nullptr);
    CHECK(s == HEISEN_ERR_GAMMA_POLE);
    CHECK(std::string(heisen_status_name(s)) == "GammaPole");

    CHECK(heisen_eval_exact(0.3, 0.9, 5, 1.0, 0.7, nullptr, &e10) ==
          HEISEN_ERR_PARAM_OUT_OF_RANGE);
}

TEST_CASE("t-pair routes and route reporting") {
    heisen_complex t1{}, t2{};
    int used = -1;
    REQUIRE(heisen_t_pair(0.3, 0.9, 5.0, HEISEN_ROUTE_AUTO, &t1, &t2, &used) == HEISEN_OK);
    CHECK(used == HEISEN_ROUTE_SERIES);
    heisen::TPair want = heisen::t_pair(heisen::Params{0.3, 0.9}, 5.0);
    CHECK(t1.re == want.t1.real());
    CHECK(t2.im == want.t2.imag());

    REQUIRE(heisen_t_pair(0.7, 0.7, 10.0, HEISEN_ROUTE_AUTO, &t1, &t2, &used) == HEISEN_OK);
    CHECK(used == HEISEN_ROUTE_BESSEL);

    CHECK(heisen_t_pair(0.3, 0.9, 5.0, 99, &t1, &t2, &used) ==
          HEISEN_ERR_PARAM_OUT_OF_RANGE);
}

TEST_CASE("expansion forms through the C boundary") {
    heisen_complex m{};
    double e10 = 0.0;
    int m_used = 0, route = -1, low = -1;
    REQUIRE(heisen_expand(0.3, 0.9, 100, 1.0, 1.0, 2, HEISEN_FORM_T, &m, &e10, &m_used,
                          &route, &low) == HEISEN_OK);
    CHECK(m_used == 2);
    CHECK(low == 0);
    heisen::ExpansionResult want =
        heisen::expand_t(heisen::Params{0.3, 0.9}, heisen::EvalPoint{100, 1.0, 1.0}, 2);
    CHECK(m.re == want.value.mant.real());
    CHECK(e10 == want.value.exp10);

    REQUIRE(heisen_expand(0.3, 0.9, 100, 1.0, 0.005, 3, HEISEN_FORM_T, &m, &e10, &m_used,
                          &route, &low) == HEISEN_OK);
    CHECK(m_used == 1);  // small-angle clamp crosses the boundary intact

    CHECK(heisen_expand(0.3, 0.9, 100, 1.0, 1.0, 2, HEISEN_FORM_BESSEL, &m, &e10, &m_used,
                        &route, &low) == HEISEN_ERR_PARAM_OUT_OF_RANGE);
    CHECK(heisen_expand(0.7, 0.7, 100, 1.0, 1.0, 2, HEISEN_FORM_BESSEL, &m, &e10, &m_used,
                        &route, &low) == HEISEN_OK);
    CHECK(route == HEISEN_ROUTE_BESSEL);
}

TEST_CASE("coefficient table handle lifecycle") {
    heisen_coeff_table* t = nullptr;
    REQUIRE(heisen_coeff_table_build(0.3, 0.9, 0.8, 4, &t) == HEISEN_OK);
    REQUIRE(t != nullptr);
    CHECK(heisen_coeff_table_depth(t) == 4);

    heisen_complex a{}, b{}, c{}, d{};
    REQUIRE(heisen_coeff_table_row(t, 0, &a, &b, &c, &d) == HEISEN_OK);
    CHECK(std::abs(a.re - 0.9164818302091954) < 1e-12);
    CHECK(std::abs(d.im - (-1.059698615106885)) < 1e-12);
    CHECK(heisen_coeff_table_row(t, 4, &a, &b, &c, &d) == HEISEN_ERR_PARAM_OUT_OF_RANGE);
    heisen_coeff_table_free(t);

    heisen_coeff_table* bad = nullptr;
    CHECK(heisen_coeff_table_build(1.5, -1.5, 0.8, 2, &bad) == HEISEN_ERR_GAMMA_POLE);
    CHECK(bad == nullptr);
}

TEST_CASE("error profile handle lifecycle") {
    const long ns[] = {25, 50, 100};
    const double ths[] = {1.0};
    heisen_error_profile* e = nullptr;
    REQUIRE(heisen_error_profile_build(0.3, 0.9, ns, 3, ths, 1, 1, &e) == HEISEN_OK);
    double ae = -1, re = -1, br = -1, slope = 0;
    REQUIRE(heisen_error_profile_cell(e, 0, 2, &ae, &re, &br) == HEISEN_OK);
    CHECK(ae >= 0.0);
    CHECK(br > 0.0);
    REQUIRE(heisen_error_profile_slope(e, 0, &slope) == HEISEN_OK);
    CHECK(std::abs(slope - (-1.036)) < 0.05);
    CHECK(heisen_error_profile_max_bound_ratio(e) >= br);
    CHECK(heisen_error_profile_cell(e, 1, 0, &ae, &re, &br) ==
          HEISEN_ERR_PARAM_OUT_OF_RANGE);
    heisen_error_profile_free(e);
}

TEST_CASE("zero report handle lifecycle") {
    heisen_zero_report* r = nullptr;
    REQUIRE(heisen_find_zeros(1.0, 12, &r) == HEISEN_OK);
    CHECK(heisen_zero_report_count(r) == 12);
    double z = 0, eb = 0, eu = 0;
    REQUIRE(heisen_zero_report_row(r, 1, &z, &eb, &eu) == HEISEN_OK);
    CHECK(std::abs(z - M_PI / 13.0) < 1e-10);
    CHECK(std::abs(eb - M_PI / 13.0) < 1e-10);
    CHECK(heisen_zero_report_row(r, 0, &z, &eb, &eu) == HEISEN_ERR_PARAM_OUT_OF_RANGE);
    CHECK(heisen_zero_report_row(r, 13, &z, &eb, &eu) == HEISEN_ERR_PARAM_OUT_OF_RANGE);
    heisen_zero_report_free(r);
}

TEST_CASE("scan, cosine and order-check pass-throughs") {
    double mn = 0, xa = 0, mi = 0;
    int nv = 0, pm = 0;
    REQUIRE(heisen_prop1_scan(0.3, 0.9, 30.0, 400, &mn, &xa, &mi, &nv, &pm) == HEISEN_OK);
    CHECK(nv == 1);
    CHECK(pm == 1);
    CHECK(heisen_prop1_scan(0.5, 0.5, 30.0, 400, &mn, &xa, &mi, &nv, &pm) ==
          HEISEN_ERR_PRECONDITION_VIOLATION);

    double v = 0, band = 0;
    REQUIRE(heisen_cosine_approx(0.7, 200, 1.0, &v, &band) == HEISEN_OK);
    CHECK(band == doctest::Approx(0.005));
    CHECK(heisen_cosine_approx(0.7, 5, 1.0, &v, &band) == HEISEN_ERR_ARGUMENT_TOO_SMALL);

    double e1 = 0, e2 = 0, ratio = 0;
    int degen = -1;
    REQUIRE(heisen_zero_order_check(0.7, 1, 50, 100, &e1, &e2, &ratio, &degen) == HEISEN_OK);
    CHECK(degen == 0);
    CHECK(ratio >= 4.0);
    CHECK(ratio <= 16.0);
}
