// Command-line front end. Only the C API (heisen.h) is used, so this file
// doubles as a usage example for external callers of the shared library.
#include <heisen.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using ojson = nlohmann::ordered_json;

namespace {

struct CliError {
    int exit_code;  // 2 config, 3 numerical
    std::string code;
    std::string message;
};

// input-validation statuses count as config errors (exit 2); genuine
// computation failures exit 3
int exit_code_for(heisen_status s) {
    switch (s) {
        case HEISEN_ERR_NONFINITE_INPUT:
        case HEISEN_ERR_PARAM_OUT_OF_RANGE:
        case HEISEN_ERR_THETA_OUT_OF_RANGE:
        case HEISEN_ERR_DEGREE_TOO_LARGE:
        case HEISEN_ERR_TERM_COUNT_EXCEEDS_TABLE:
        case HEISEN_ERR_ARGUMENT_TOO_SMALL:
        case HEISEN_ERR_PRECONDITION_VIOLATION:
            return 2;
        default:
            return 3;
    }
}

[[noreturn]] void fail(heisen_status s, const std::string& context) {
    std::string msg = heisen_last_error();
    if (!context.empty()) msg = context + ": " + msg;
    throw CliError{exit_code_for(s), heisen_status_name(s), msg};
}

[[noreturn]] void fail_config(const std::string& message) {
    throw CliError{2, "ConfigError", message};
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* route_label(int route) {
    switch (route) {
        case HEISEN_ROUTE_SERIES: return "series";
        case HEISEN_ROUTE_KUMMER: return "kummer";
        case HEISEN_ROUTE_BESSEL: return "bessel";
        default: return "auto";
    }
}

struct Table {
    ojson meta;
    std::vector<std::string> columns;
    std::vector<ojson> rows;
};

std::string render_cell(const ojson& v) {
    if (v.is_null()) return "nan";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    return fmt(v.get<double>());
}

void emit(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "csv") {
        os << "# " << t.meta.dump() << "\n";
        for (size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (const ojson& row : t.rows) {
            for (size_t i = 0; i < t.columns.size(); ++i)
                os << (i ? "," : "") << render_cell(row.at(t.columns[i]));
            os << "\n";
        }
    } else {
        ojson doc;
        doc["meta"] = t.meta;
        doc["rows"] = t.rows;
        os << doc.dump(2) << "\n";
    }
}

// deterministic ordered output regardless of worker schedule
template <typename F>
void parallel_rows(size_t count, F&& fill_row) {
    unsigned hw = std::thread::hardware_concurrency();
    size_t workers = std::min<size_t>(count, hw == 0 ? 1 : std::min(hw, 8u));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fill_row(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) fill_row(i);
        });
    for (auto& th : pool) th.join();
}

struct CommonOpts {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<long> n;
    std::vector<double> theta;
    double rho = 1.0;
    int m = 4;
    int K = 4;
    std::string out;
    std::string format;
    long seed = 0;
    std::vector<double> x;
    double x_max = 50.0;
    long grid = 2000;
    std::string form = "t";
};

void write_table(const Table& t, const CommonOpts& o, const std::string& default_format) {
    std::string format = o.format.empty() ? default_format : o.format;
    if (format != "csv" && format != "json")
        fail_config("unknown format '" + format + "' (expected csv or json)");
    if (o.out.empty()) {
        emit(t, format, std::cout);
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) fail_config("cannot open output file '" + o.out + "'");
    emit(t, format, f);
}

ojson base_meta(const char* command, const CommonOpts& o) {
    ojson m;
    m["command"] = command;
    m["version"] = heisen_version();
    m["alpha"] = o.alpha;
    m["beta"] = o.beta;
    m["seed"] = o.seed;
    return m;
}

int form_code(const std::string& form) {
    if (form == "t") return HEISEN_FORM_T;
    if (form == "kummer") return HEISEN_FORM_KUMMER;
    if (form == "bessel") return HEISEN_FORM_BESSEL;
    fail_config("unknown form '" + form + "' (expected t, kummer or bessel)");
}

void cmd_eval(const CommonOpts& o) {
    if (o.n.empty() || o.theta.empty()) fail_config("eval needs --n and --theta");
    const int form = form_code(o.form);

    struct RowData {
        heisen_status exact_status = HEISEN_OK, asym_status = HEISEN_OK;
        std::string exact_msg;
        heisen_complex em{}, am{};
        double ee = 0.0, ae = 0.0;
        int m_used = 0, route = 0;
        long n = 0;
        double theta = 0.0;
    };
    size_t count = o.n.size() * o.theta.size();
    std::vector<RowData> data(count);

    parallel_rows(count, [&](size_t i) {
        RowData& r = data[i];
        r.n = o.n[i / o.theta.size()];
        r.theta = o.theta[i % o.theta.size()];
        r.exact_status = heisen_eval_exact(o.alpha, o.beta, r.n, o.rho, r.theta, &r.em, &r.ee);
        if (r.exact_status != HEISEN_OK) {
            r.exact_msg = heisen_last_error();
            return;
        }
        int low = 0;
        r.asym_status = heisen_expand(o.alpha, o.beta, r.n, o.rho, r.theta, o.m, form,
                                      &r.am, &r.ae, &r.m_used, &r.route, &low);
    });

    Table t;
    t.meta = base_meta("eval", o);
    t.meta["rho"] = o.rho;
    t.meta["m"] = o.m;
    t.meta["form"] = o.form;
    t.columns = {"n",       "theta",   "rho",       "exact_re", "exact_im",
                 "exact_exp10", "asym_re", "asym_im", "asym_exp10", "abs_err",
                 "rel_err", "route",   "m"};
    for (const RowData& r : data) {
        if (r.exact_status != HEISEN_OK) {
            std::string msg = "n=" + std::to_string(r.n) + " theta=" + fmt(r.theta) +
                              ": " + r.exact_msg;
            throw CliError{exit_code_for(r.exact_status),
                           heisen_status_name(r.exact_status), msg};
        }
        ojson row;
        row["n"] = r.n;
        row["theta"] = r.theta;
        row["rho"] = o.rho;
        row["exact_re"] = r.em.re;
        row["exact_im"] = r.em.im;
        row["exact_exp10"] = r.ee;
        if (r.asym_status == HEISEN_OK) {
            // difference at a common scale so large carried exponents survive
            double common = std::max(r.ee, r.ae);
            std::complex<double> ev{r.em.re, r.em.im}, av{r.am.re, r.am.im};
            std::complex<double> es = ev * std::pow(10.0, r.ee - common);
            std::complex<double> as = av * std::pow(10.0, r.ae - common);
            double abs_err = std::abs(es - as) * std::pow(10.0, common);
            double rel_err = std::abs(es - as) / std::abs(es);
            row["asym_re"] = r.am.re;
            row["asym_im"] = r.am.im;
            row["asym_exp10"] = r.ae;
            row["abs_err"] = abs_err;
            row["rel_err"] = rel_err;
            row["route"] = route_label(r.route);
            row["m"] = r.m_used;
        } else {
            row["asym_re"] = nullptr;
            row["asym_im"] = nullptr;
            row["asym_exp10"] = nullptr;
            row["abs_err"] = nullptr;
            row["rel_err"] = nullptr;
            row["route"] = heisen_status_name(r.asym_status);
            row["m"] = 0;
        }
        t.rows.push_back(std::move(row));
    }
    write_table(t, o, "csv");
}

void cmd_errtable(const CommonOpts& o) {
    if (o.n.empty() || o.theta.empty()) fail_config("errtable needs --n and --theta");
    heisen_error_profile* e = nullptr;
    heisen_status s = heisen_error_profile_build(o.alpha, o.beta, o.n.data(), o.n.size(),
                                                 o.theta.data(), o.theta.size(), o.m, &e);
    if (s != HEISEN_OK) fail(s, "error profile");

    Table t;
    t.meta = base_meta("errtable", o);
    t.meta["m"] = o.m;
    t.meta["max_bound_ratio"] = heisen_error_profile_max_bound_ratio(e);
    t.columns = {"theta", "n", "abs_err", "rel_err", "bound_ratio", "slope"};
    for (size_t ti = 0; ti < o.theta.size(); ++ti) {
        double slope = 0.0;
        heisen_error_profile_slope(e, ti, &slope);
        for (size_t ni = 0; ni < o.n.size(); ++ni) {
            double ae = 0, re = 0, br = 0;
            heisen_error_profile_cell(e, ti, ni, &ae, &re, &br);
            ojson row;
            row["theta"] = o.theta[ti];
            row["n"] = o.n[ni];
            row["abs_err"] = ae;
            row["rel_err"] = re;
            row["bound_ratio"] = br;
            row["slope"] = slope;
            t.rows.push_back(std::move(row));
        }
    }
    heisen_error_profile_free(e);
    write_table(t, o, "csv");
}

void cmd_coeffs(const CommonOpts& o) {
    if (o.theta.size() != 1) fail_config("coeffs needs exactly one --theta");
    heisen_coeff_table* tab = nullptr;
    heisen_status s = heisen_coeff_table_build(o.alpha, o.beta, o.theta[0], o.K, &tab);
    if (s != HEISEN_OK) fail(s, "coefficient table");

    Table t;
    t.meta = base_meta("coeffs", o);
    t.meta["theta"] = o.theta[0];
    t.meta["K"] = o.K;
    t.columns = {"k",    "alpha_re", "alpha_im", "beta_re", "beta_im",
                 "c_re", "c_im",     "d_re",     "d_im"};
    for (int k = 0; k < heisen_coeff_table_depth(tab); ++k) {
        heisen_complex a{}, b{}, c{}, d{};
        heisen_coeff_table_row(tab, k, &a, &b, &c, &d);
        ojson row;
        row["k"] = k;
        row["alpha_re"] = a.re;
        row["alpha_im"] = a.im;
        row["beta_re"] = b.re;
        row["beta_im"] = b.im;
        row["c_re"] = c.re;
        row["c_im"] = c.im;
        row["d_re"] = d.re;
        row["d_im"] = d.im;
        t.rows.push_back(std::move(row));
    }
    heisen_coeff_table_free(tab);
    write_table(t, o, "csv");
}

void cmd_tfun(const CommonOpts& o) {
    if (o.x.empty()) fail_config("tfun needs --x");

    struct RowData {
        double x = 0.0;
        heisen_status st[3] = {HEISEN_OK, HEISEN_OK, HEISEN_OK};
        heisen_complex t1[3]{}, t2[3]{};
    };
    std::vector<RowData> data(o.x.size());
    const int routes[3] = {HEISEN_ROUTE_SERIES, HEISEN_ROUTE_KUMMER, HEISEN_ROUTE_BESSEL};

    parallel_rows(o.x.size(), [&](size_t i) {
        RowData& r = data[i];
        r.x = o.x[i];
        for (int j = 0; j < 3; ++j)
            r.st[j] = heisen_t_pair(o.alpha, o.beta, r.x, routes[j], &r.t1[j], &r.t2[j],
                                    nullptr);
    });

    auto pair_diff = [](const RowData& r, int a, int b) -> ojson {
        if (r.st[a] != HEISEN_OK || r.st[b] != HEISEN_OK) return nullptr;
        std::complex<double> a1{r.t1[a].re, r.t1[a].im}, b1{r.t1[b].re, r.t1[b].im};
        std::complex<double> a2{r.t2[a].re, r.t2[a].im}, b2{r.t2[b].re, r.t2[b].im};
        double d1 = std::abs(a1 - b1) / std::max({std::abs(a1), std::abs(b1), 1e-300});
        double d2 = std::abs(a2 - b2) / std::max({std::abs(a2), std::abs(b2), 1e-300});
        return std::max(d1, d2);
    };

    Table t;
    t.meta = base_meta("tfun", o);
    const char* names[3] = {"series", "kummer", "bessel"};
    t.columns = {"x"};
    for (int j = 0; j < 3; ++j) {
        std::string p = names[j];
        t.columns.push_back(p + "_t1_re");
        t.columns.push_back(p + "_t1_im");
        t.columns.push_back(p + "_t2_re");
        t.columns.push_back(p + "_t2_im");
        t.columns.push_back(p + "_status");
    }
    t.columns.push_back("rd_series_kummer");
    t.columns.push_back("rd_series_bessel");

    for (const RowData& r : data) {
        ojson row;
        row["x"] = r.x;
        for (int j = 0; j < 3; ++j) {
            std::string p = names[j];
            bool ok = r.st[j] == HEISEN_OK;
            row[p + "_t1_re"] = ok ? ojson(r.t1[j].re) : ojson(nullptr);
            row[p + "_t1_im"] = ok ? ojson(r.t1[j].im) : ojson(nullptr);
            row[p + "_t2_re"] = ok ? ojson(r.t2[j].re) : ojson(nullptr);
            row[p + "_t2_im"] = ok ? ojson(r.t2[j].im) : ojson(nullptr);
            row[p + "_status"] = heisen_status_name(r.st[j]);
        }
        row["rd_series_kummer"] = pair_diff(r, 0, 1);
        row["rd_series_bessel"] = pair_diff(r, 0, 2);
        t.rows.push_back(std::move(row));
    }
    write_table(t, o, "csv");
}

void cmd_zeros(const CommonOpts& o) {
    if (o.n.size() != 1) fail_config("zeros needs exactly one --n");
    heisen_zero_report* rep = nullptr;
    heisen_status s = heisen_find_zeros(o.alpha, o.n[0], &rep);
    if (s != HEISEN_OK) fail(s, "zero search");

    Table t;
    t.meta = base_meta("zeros", o);
    t.meta["n"] = o.n[0];
    t.meta["count"] = heisen_zero_report_count(rep);
    t.meta["solver_tol"] = 1e-12;
    t.columns = {"k", "theta", "est_bessel", "est_uniform", "disc_bessel", "disc_uniform"};
    for (long k = 1; k <= heisen_zero_report_count(rep); ++k) {
        double z = 0, eb = 0, eu = 0;
        heisen_zero_report_row(rep, k, &z, &eb, &eu);
        ojson row;
        row["k"] = k;
        row["theta"] = z;
        row["est_bessel"] = eb;
        row["est_uniform"] = eu;
        row["disc_bessel"] = z - eb;
        row["disc_uniform"] = z - eu;
        t.rows.push_back(std::move(row));
    }
    heisen_zero_report_free(rep);
    write_table(t, o, "json");
}

void cmd_prop1(const CommonOpts& o) {
    double mn = 0, xa = 0, mi = 0;
    int nv = 0, pm = 0;
    heisen_status s =
        heisen_prop1_scan(o.alpha, o.beta, o.x_max, o.grid, &mn, &xa, &mi, &nv, &pm);
    if (s != HEISEN_OK) fail(s, "positivity scan");

    Table t;
    t.meta = base_meta("prop1", o);
    t.meta["x_max"] = o.x_max;
    t.meta["grid"] = o.grid;
    t.meta["fd_step_rel"] = 1e-5;
    t.columns = {"min_abs_t1", "x_at_min", "min_im_quantity", "t1_nonvanishing",
                 "phase_monotone"};
    ojson row;
    row["min_abs_t1"] = mn;
    row["x_at_min"] = xa;
    row["min_im_quantity"] = mi;
    row["t1_nonvanishing"] = nv != 0;
    row["phase_monotone"] = pm != 0;
    t.rows.push_back(std::move(row));
    write_table(t, o, "json");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heisenberg polynomial asymptotics toolkit"};
    app.require_subcommand(1);
    // config keys live under [subcommand] sections; fallthrough lets the
    // flag appear after the subcommand name
    app.fallthrough();
    app.set_config("--config", "", "config file with [subcommand] sections");
    app.allow_config_extras(false);

    CommonOpts o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "first parameter");
        sub->add_option("--beta", o.beta, "second parameter");
        sub->add_option("--n", o.n, "degree(s), comma separated")->delimiter(',');
        sub->add_option("--theta", o.theta, "angle(s) in radians, comma separated")
            ->delimiter(',');
        sub->add_option("--rho", o.rho, "radius (default 1)");
        sub->add_option("--m", o.m, "expansion term count");
        sub->add_option("--K", o.K, "coefficient table depth");
        sub->add_option("--out", o.out, "output path (default stdout)");
        sub->add_option("--format", o.format, "csv or json");
        sub->add_option("--seed", o.seed, "seed recorded in metadata for sweeps");
    };

    CLI::App* eval = app.add_subcommand("eval", "exact vs asymptotic evaluation table");
    add_common(eval);
    eval->add_option("--form", o.form, "expansion form: t, kummer or bessel");

    CLI::App* errtable = app.add_subcommand("errtable", "empirical error profile table");
    add_common(errtable);

    CLI::App* coeffs = app.add_subcommand("coeffs", "expansion coefficient table");
    add_common(coeffs);

    CLI::App* tfun = app.add_subcommand("tfun", "tri-route T-function comparison");
    add_common(tfun);
    tfun->add_option("--x", o.x, "argument grid, comma separated")->delimiter(',');

    CLI::App* zeros = app.add_subcommand("zeros", "zeros of the equal-parameter polynomial");
    add_common(zeros);

    CLI::App* prop1 = app.add_subcommand("prop1", "no-positive-zeros scan for T1");
    add_common(prop1);
    prop1->add_option("--x-max", o.x_max, "scan upper limit");
    prop1->add_option("--grid", o.grid, "scan point count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        ojson err;
        err["error"]["code"] = "ConfigError";
        err["error"]["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) cmd_eval(o);
        else if (errtable->parsed()) cmd_errtable(o);
        else if (coeffs->parsed()) cmd_coeffs(o);
        else if (tfun->parsed()) cmd_tfun(o);
        else if (zeros->parsed()) cmd_zeros(o);
        else if (prop1->parsed()) cmd_prop1(o);
    } catch (const CliError& e) {
        ojson err;
        err["error"]["code"] = e.code;
        err["error"]["message"] = e.message;
        std::cerr << err.dump() << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        ojson err;
        err["error"]["code"] = "InternalError";
        err["error"]["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 3;
    }
    return 0;
}
