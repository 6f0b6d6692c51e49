// hecke_lab: batch front end writing CSV/JSON reports.
//
// Exit codes: 0 success, 2 usage, 3 precision, 4 compute cap, 5 selftest failure.

#include "CLI11.hpp"

#include "hecke/acceptance.hpp"
#include "hecke/density.hpp"
#include "hecke/field_arith.hpp"
#include "hecke/lcentral.hpp"
#include "hecke/moments.hpp"
#include "hecke/report.hpp"
#include "hecke/specfun.hpp"
#include "hecke/sweep.hpp"
#include "hecke/vz.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

using namespace hecke;
using report::Record;

namespace {

constexpr int kExitUsage = 2, kExitPrecision = 3, kExitCap = 4, kExitSelftest = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void cap(bool over, const std::string& what) {
    if (over) throw ComputeCapError(what);
}

// 10^-digits, the absolute error target of every MPFR output
Real tolerance(const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    return pow10_neg(ctx.digits);
}

int default_digits() {
    const char* env = std::getenv("HECKE_DIGITS");
    if (!env || !*env) return 64;
    char* end = nullptr;
    const long d = std::strtol(env, &end, 10);
    if (*end != '\0') throw UsageError(std::string("HECKE_DIGITS is not an integer: '") + env + "'");
    return static_cast<int>(d);
}

struct Config {
    int digits = 64;
    std::string format = "csv";
    std::string out;
    int threads = 0;

    long n = 1, k = 0, M = 50, N = 100, r = 1, max_n = 33;
    double T = 10, alpha = 1, width = 2.5;
    std::string method = "both", testfn = "fejer";
    std::vector<std::string> only;

    PrecisionContext ctx() const { return {digits, 8}; }
};

density::TestFunction test_function(const Config& c) {
    if (c.testfn == "fejer") {
        if (!(c.alpha > 0)) throw UsageError("--alpha must be positive");
        return density::TestFunction::fejer(c.alpha);
    }
    if (c.testfn == "gaussian") {
        if (!(c.width > 0)) throw UsageError("--width must be positive");
        return density::TestFunction::gaussian(c.width);
    }
    throw UsageError("unknown --testfn '" + c.testfn + "' (fejer or gaussian)");
}

std::vector<Record> cmd_coeffs(const Config& c) {
    const long k = c.k ? c.k : 2 * c.n - 1;
    if (k < 1 || k % 2 == 0) throw UsageError("--k must be a positive odd integer");
    if (c.M < 1) throw UsageError("--M must be positive");
    cap(c.M > 10'000'000, "coeffs: M above 1e7");
    const auto ctx = c.ctx();
    const auto t = field::CoeffTable::build(k, c.M, ctx);
    std::vector<Record> out;
    for (long m = 1; m <= c.M; ++m) {
        Record r;
        r.add("k", k).add("m", m).add("coeff", t.exact[size_t(m)].get_str());
        r.add("normalized", t.normalized[size_t(m)]).add("normalized_err", tolerance(ctx));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Record> cmd_central(const Config& c) {
    if (c.n < 1) throw UsageError("--n must be positive");
    if (c.method != "series" && c.method != "exact" && c.method != "both")
        throw UsageError("--method must be series, exact or both");
    cap(c.n > 5000, "central: n above 5000");
    const auto ctx = c.ctx();
    Record r;
    r.add("n", c.n).add("k", 2 * c.n - 1).add("digits", long(c.digits));
    std::optional<Real> s, e;
    if (c.method != "exact") {
        const auto v = lcentral::central_value_series(c.n, ctx);
        s = v.value;
        r.add("series", v.value).add("series_tail_bound", v.tail_bound).add("terms", v.terms);
    }
    if (c.method != "series") {
        const auto v = vz::central_value_exact(c.n, ctx);
        e = v.L;
        r.add("exact", v.L).add("exact_err", tolerance(ctx));
        r.add("A", v.A.get_str()).add("A_factored", vz::A_factored(c.n));
    }
    if (s && e) {
        ScopedPrecision sp(ctx);
        r.add("delta", abs(*s - *e)).add("agree", abs(*s - *e) <= Real(1e-10));
    }
    return {r};
}

std::vector<Record> cmd_table(const Config& c) {
    if (c.max_n < 1) throw UsageError("--max must be positive");
    cap(c.max_n > 2001, "table: max above 2001");
    const auto ctx = c.ctx();
    ScopedPrecision sp(ctx);
    std::vector<Record> out;
    for (long n = 1; n <= c.max_n; n += 2) {
        const auto v = vz::central_value_exact(n, ctx);
        const Real four = floor(v.L * Real(10000)) / Real(10000);
        Record r;
        r.add("n", n).add("A_factored", vz::A_factored(n)).add("A", v.A.get_str());
        r.add("L", v.L).add("L_err", tolerance(ctx)).add("L_4dp", four.to_fixed(4));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Record> cmd_moment(const Config& c) {
    if (c.r != 1 && c.r != 2) throw UsageError("--r must be 1 or 2");
    if (c.N < 1) throw UsageError("--N must be positive");
    cap(c.N > 20000, "moment: N above 20000");
    const auto ctx = c.ctx();
    const auto vals = sweep::central_values(c.N, ctx);
    const auto m = moments::moment_from_values(int(c.r), c.N, vals, ctx);
    ScopedPrecision sp(ctx);
    Real err(0);  // propagated series tail bounds
    for (long i = 0; i < c.N; ++i) {
        const auto& v = vals[size_t(i)];
        err += c.r == 1 ? v.tail_bound : 2 * abs(v.value) * v.tail_bound;
    }
    err /= Real(c.N);
    Record r;
    r.add("r", c.r).add("N", c.N).add("empirical", m.empirical).add("empirical_err", err);
    if (c.r == 1) {
        r.add("predicted", m.predicted_main).add("residual", m.residual).add("bound", m.bound);
    } else {
        const auto p = moments::m2_conjecture(c.N, ctx);
        r.add("conjecture_displayed", p.displayed).add("conjecture_reduced", p.reduced).add("C", p.C);
        r.add("residual", m.residual).add("forms_difference", p.difference);
    }
    return {r};
}

std::vector<Record> cmd_conjecture(const Config& c) {
    if (c.N < 1) throw UsageError("--N must be positive");
    cap(c.N > 100'000'000, "conjecture: N above 1e8");
    const auto ctx = c.ctx();
    const auto p = moments::m2_conjecture(c.N, ctx);
    Record r;
    r.add("N", c.N).add("displayed", p.displayed).add("reduced", p.reduced).add("C", p.C);
    r.add("digamma_mean", p.digamma_mean).add("difference", p.difference);
    r.add("f0", moments::f0(ctx)).add("f1", moments::f1(ctx)).add("err", tolerance(ctx));
    return {r};
}

std::vector<Record> cmd_zeros(const Config& c, bool family) {
    if (!(c.T > 0)) throw UsageError("--T must be positive");
    const auto ctx = c.ctx();
    std::vector<lcentral::ZeroRecord> recs;
    if (family) {
        if (c.N < 1) throw UsageError("--N must be positive");
        cap(c.N * c.T > 200000, "zeros: N*T above 2e5");
        recs = sweep::zeros(c.N, c.T, ctx);
    } else {
        if (c.n < 1) throw UsageError("--n must be positive");
        cap(c.n * c.T > 200000, "zeros: n*T above 2e5");
        recs.push_back(lcentral::zeros_up_to(c.n, c.T, ctx));
    }
    std::vector<Record> out;
    for (const auto& z : recs) {
        if (z.warning) std::cerr << "hecke_lab: n = " << z.n << ": " << z.message << "\n";
        for (size_t i = 0; i < z.gammas.size(); ++i) {
            Record r;
            r.add("n", z.n).add("index", long(i + 1)).add("gamma", z.gammas[i]).add("gamma_tol", 1e-10);
            r.add("scaled", z.scaled[i]).add("count", long(z.gammas.size())).add("expected_count", z.expected_count);
            r.add("warning", z.warning);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<Record> cmd_density(const Config& c) {
    if (c.N < 2) throw UsageError("--N must be at least 2");
    if (!(c.T > 0)) throw UsageError("--T must be positive");
    cap(c.N * c.T > 20000, "density: N*T above 2e4");
    const auto rep = density::empirical_one_level(c.N, test_function(c), c.T, c.ctx());
    Record r;
    r.add("N", rep.N).add("T", rep.T).add("testfn", rep.testfn);
    r.add("empirical_raw", rep.empirical_raw).add("tail_correction", rep.tail_correction);
    r.add("empirical", rep.empirical).add("explicit_formula", rep.explicit_formula);
    r.add("primes_split", rep.primes_split).add("primes_squares", rep.primes_squares).add("primes_higher", rep.primes_higher);
    r.add("rmt", rep.rmt).add("nonvanishing_lower_bound", rep.nonvanishing_lower_bound);
    r.add("empirical_bound", rep.empirical_bound).add("warnings", long(rep.warnings));
    return {r};
}

std::vector<Record> cmd_ratios(const Config& c) {
    if (c.N < 2) throw UsageError("--N must be at least 2");
    cap(c.N > 5000, "ratios: N above 5000");
    const auto f = test_function(c);
    const auto ctx = c.ctx();
    const double rat = density::ratios_one_level(c.N, f, ctx);
    const auto fam = density::explicit_formula_family(c.N, density::ScaledTest{f, std::log(double(c.N))}, ctx);
    double ef = 0;
    for (const auto& e : fam) ef += e.total;
    ef /= double(fam.size());
    const auto a = density::ratios_A(0, 0);
    Record r;
    r.add("N", c.N).add("testfn", f.describe()).add("ratios", rat).add("explicit_formula", ef);
    r.add("difference", rat - ef).add("rmt", density::rmt_prediction(f, ctx).fhat_form);
    r.add("euler_cutoff", a.P).add("A_tail_bound", a.tail_bound);
    return {r};
}

std::vector<Record> cmd_constants(const Config& c) {
    const auto ctx = c.ctx();
    const auto& k = specfun::constants(ctx);
    const std::pair<const char*, const Real*> list[] = {
        {"euler_gamma", &k.euler_gamma},         {"zeta_at_2", &k.zeta_at_2},
        {"zeta_prime_at_2", &k.zeta_prime_at_2}, {"omega", &k.omega},
        {"two_pi_over_sqrt7", &k.two_pi_over_sqrt7}, {"three_pi_over_sqrt7", &k.three_pi_over_sqrt7},
        {"L1_chi7", &k.L1_chi7},                 {"Lprime1_chi7", &k.Lprime1_chi7},
    };
    std::vector<Record> out;
    for (const auto& [name, v] : list) {
        Record r;
        r.add("name", std::string(name)).add("value", *v).add("value_err", tolerance(ctx));
        out.push_back(std::move(r));
    }
    return out;
}

void emit(const Config& c, const std::vector<Record>& recs) {
    const auto fmt = report::parse_format(c.format);
    if (c.out.empty()) {
        report::write(std::cout, recs, fmt, c.digits);
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + c.out);
    report::write(f, recs, fmt, c.digits);
}

int cmd_selftest(const Config& c) {
    int failed = 0;
    std::vector<Record> recs;
    const auto lines = acceptance::run(c.only, [&](const acceptance::Line& l) {
        std::cerr << acceptance::format_line(l) << std::endl;
    });
    for (const auto& l : lines) {
        failed += l.pass ? 0 : 1;
        Record r;
        r.add("id", l.id).add("title", l.title).add("pass", l.pass).add("detail", l.detail);
        recs.push_back(std::move(r));
    }
    emit(c, recs);
    return failed ? kExitSelftest : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grossencharacter L-function laboratory for Q(sqrt -7)"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;
    try {
        c.digits = default_digits();
    } catch (const UsageError& e) {
        std::cerr << "hecke_lab: " << e.what() << "\n";
        return kExitUsage;
    }
    app.add_option("--digits", c.digits, "working decimal digits (default $HECKE_DIGITS, else 64)");
    app.add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", c.out, "output file (default stdout)");
    app.add_option("--threads", c.threads, "OpenMP threads (default: runtime default)")->check(CLI::PositiveNumber);

    auto* coeffs = app.add_subcommand("coeffs", "Hecke coefficients chi^(k)(m), m <= M");
    coeffs->add_option("--k", c.k, "odd exponent k");
    coeffs->add_option("--n", c.n, "use k = 2n - 1 when --k is absent");
    coeffs->add_option("--M", c.M, "largest m");

    auto* central = app.add_subcommand("central", "L(1/2, chi^(2n-1)) by the series and the exact formula");
    central->add_option("--n", c.n, "index n")->required();
    central->add_option("--method", c.method, "series, exact or both");

    auto* table = app.add_subcommand("table", "exact values A(n) and L(1/2) for odd n");
    table->add_option("--max", c.max_n, "largest n (default 33)");

    auto* moment = app.add_subcommand("moment", "family moment (1/N) sum L(1/2, chi^(4n-3))^r");
    moment->add_option("--r", c.r, "1 or 2")->required();
    moment->add_option("--N", c.N, "family size")->required();

    auto* conj = app.add_subcommand("conjecture", "second-moment main term, both forms");
    conj->add_option("--N", c.N, "family size")->required();

    auto* zeros = app.add_subcommand("zeros", "zeros of L(s, chi^(4n-3)) up to height T");
    zeros->add_option("--n", c.n, "family index (one member)");
    auto* zN = zeros->add_option("--N", c.N, "all members n <= N");
    zeros->add_option("--T", c.T, "height");

    auto* dens = app.add_subcommand("density", "one-level density of low zeros");
    dens->add_option("--N", c.N, "family size")->required();
    dens->add_option("--testfn", c.testfn, "fejer or gaussian");
    dens->add_option("--alpha", c.alpha, "fejer support");
    dens->add_option("--width", c.width, "gaussian width");
    dens->add_option("--T", c.T, "zero height (default 10)");

    auto* rat = app.add_subcommand("ratios", "ratios-conjecture one-level density vs the explicit formula");
    rat->add_option("--N", c.N, "family size")->required();
    rat->add_option("--testfn", c.testfn, "fejer or gaussian");
    rat->add_option("--alpha", c.alpha, "fejer support");
    rat->add_option("--width", c.width, "gaussian width");

    auto* consts = app.add_subcommand("constants", "named constants");
    auto* self = app.add_subcommand("selftest", "run the acceptance checks");
    self->add_option("--only", c.only, "check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        c.ctx().validate();
        if (c.threads > 0) omp_set_num_threads(c.threads);
        if (self->parsed()) return cmd_selftest(c);
        std::vector<Record> recs;
        if (coeffs->parsed()) recs = cmd_coeffs(c);
        else if (central->parsed()) recs = cmd_central(c);
        else if (table->parsed()) recs = cmd_table(c);
        else if (moment->parsed()) recs = cmd_moment(c);
        else if (conj->parsed()) recs = cmd_conjecture(c);
        else if (zeros->parsed()) recs = cmd_zeros(c, zN->count() > 0);
        else if (dens->parsed()) recs = cmd_density(c);
        else if (rat->parsed()) recs = cmd_ratios(c);
        else if (consts->parsed()) recs = cmd_constants(c);
        emit(c, recs);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "hecke_lab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hecke_lab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "hecke_lab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PrecisionError& e) {
        std::cerr << "hecke_lab: precision: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const ComputeCapError& e) {
        std::cerr << "hecke_lab: compute cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "hecke_lab: " << e.what() << "\n";
        return 1;
    }
}
