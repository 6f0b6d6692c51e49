#include "hecke/lcentral.hpp"

#include "hecke/field_arith.hpp"
#include "hecke/quadrature.hpp"
#include "hecke/specfun.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hecke::lcentral {

namespace {

constexpr double kH = 2 * std::numbers::pi / 7;  // 2 pi / 7
constexpr double kQ = 7 / (2 * std::numbers::pi);
constexpr double kLn10 = 2.302585092994046;

void check_cap(long terms, long k, const char* who) {
    if (static_cast<double>(terms) * static_cast<double>(k) > kComputeCap) {
        std::ostringstream os;
        os << who << ": " << terms << " terms at exponent " << k << " exceed the compute cap";
        throw ComputeCapError(os.str());
    }
}

// Re log Gamma(x + i y) in double, via the complex routine at low precision.
double re_lgamma(double x, double y) {
    const PrecisionContext low{20, 5};
    ScopedPrecision sp(low);
    return specfun::lgamma(Complex(Real(x), Real(y)), low).re.to_double();
}

double im_lgamma(double x, double y) {
    const PrecisionContext low{20, 5};
    ScopedPrecision sp(low);
    return specfun::lgamma(Complex(Real(x), Real(y)), low).im.to_double();
}

// log Gamma on the whole plane minus the poles; only exp() of it is used, so
// the branch of the reflected value does not matter.
Complex lgamma_any(const Complex& z, const PrecisionContext& ctx) {
    if (z.re.sign() > 0) return specfun::lgamma(z, ctx);
    if (z.im.is_zero() && floor(z.re) == z.re) throw std::domain_error("gamma_factor_X: pole of Gamma");
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    const Real pi = const_pi();
    Real s, c;
    sin_cos(pi * z.re, s, c);
    const Real ey = exp(pi * z.im);
    const Real eny = Real(1) / ey;
    const Complex sin_piz(s * (ey + eny) / 2, c * (ey - eny) / 2);
    return Complex(log(pi)) - log(sin_piz) - specfun::lgamma(Complex(Real(1)) - z, ctx);
}

double log_series_bound(long n, long terms) {
    const double x = kH * static_cast<double>(terms + 1);
    const double nm1 = static_cast<double>(n - 1);
    if (x <= nm1 + 1) return std::numeric_limits<double>::infinity();
    const double r = std::exp(-kH * (1 - nm1 / x));
    return std::log(4.0) + nm1 * std::log(x) - x - std::lgamma(static_cast<double>(n)) +
           std::log(x / (x - nm1)) - std::log1p(-r);
}

}  // namespace

const char* method_name(Method m) { return m == Method::series ? "series" : "exact"; }

double log_tail_bound(long n, long terms) {
    if (n < 1) throw std::invalid_argument("log_tail_bound: n must be positive");
    return log_series_bound(n, terms);
}

SeriesPlan plan_series(long n, int digits) {
    if (n < 1) throw std::invalid_argument("plan_series: n must be positive");
    const double target = -digits * kLn10;
    const long k = 2 * n - 1;
    long M = std::max<long>(1, static_cast<long>(std::ceil(static_cast<double>(n) / kH)));
    for (;; ++M) {
        check_cap(M, k, "central_value_series");
        const double lb = log_series_bound(n, M);
        if (lb < target) return {M, lb};
    }
}

CentralValue central_value_series(long n, const PrecisionContext& ctx) {
    ctx.validate();
    if (n < 1) throw std::invalid_argument("central_value_series: n must be positive");
    ScopedPrecision sp(ctx);
    CentralValue cv;
    cv.n = n;
    if (n % 2 == 0) {
        cv.value = Real(0);
        cv.method = Method::exact;
        cv.tail_bound = Real(0);
        return cv;
    }
    const SeriesPlan plan = plan_series(n, ctx.digits);
    const long k = 2 * n - 1;
    const Real h = 2 * const_pi() / 7;
    Real sum(0);
    for (long m = 1; m <= plan.terms; ++m) {
        const mpz_class c = field::hecke_coeff(k, m);
        if (c == 0) continue;
        const Real lm = log(Real(m));
        sum += Real(c) * exp(-(Real(n) * lm)) * specfun::reg_gamma_Q(n, h * Real(m), ctx);
    }
    cv.value = 2 * sum;
    cv.method = Method::series;
    cv.tail_bound = exp(Real(plan.log_tail_bound));
    cv.terms = plan.terms;
    return cv;
}

Complex gamma_factor_X(long k, const Complex& s, const PrecisionContext& ctx) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("gamma_factor_X: k must be odd and positive");
    ctx.validate();
    ScopedPrecision sp(ctx);
    const Real half_k = Real(k) / 2;
    const Complex z1 = Complex(Real(1) + half_k) - s;
    const Complex z2 = s + Complex(half_k);
    const Real logQ = log(Real(7) / (2 * const_pi()));
    const Complex e = (Complex(Real(1)) - s - s) * logQ + lgamma_any(z1, ctx) - lgamma_any(z2, ctx);
    return exp(e);
}

Real theta_symmetry_residual(long n, const Real& y, const PrecisionContext& ctx) {
    ctx.validate();
    if (n < 1) throw std::invalid_argument("theta_symmetry_residual: n must be positive");
    if (y.sign() <= 0) throw std::invalid_argument("theta_symmetry_residual: y must be positive");
    const long k = 4 * n - 3;
    const double yd = y.to_double();
    const double ymin = std::min(yd, 1 / yd);
    // largest term of f is about (k / (2 e h y))^(k/2)
    const double big = 0.5 * k * std::log10(std::max(1.0, k / (2 * std::exp(1.0) * kH * ymin)));
    const int wd = ctx.digits + static_cast<int>(std::ceil(big)) + 10;
    const PrecisionContext wctx = ctx.with_digits(wd);
    wctx.validate();
    long M = 1;
    while ((0.5 * k + 0.5) * std::log(static_cast<double>(M)) + std::log(2.0) - kH * M * ymin > -wd * kLn10 ||
           M < k / (2 * kH * ymin))
        ++M;
    check_cap(M, k, "theta_symmetry_residual");
    ScopedPrecision sp(wctx);
    const Real h = 2 * const_pi() / 7;
    const Real yy(y);
    const Real yi = Real(1) / yy;
    Real f(0), g(0);
    for (long m = 1; m <= M; ++m) {
        const mpz_class c = field::hecke_coeff(k, m);
        if (c == 0) continue;
        const Real cm(c);
        f += cm * exp(-(h * Real(m) * yy));
        g += cm * exp(-(h * Real(m) * yi));
    }
    // f(y) = sum chi(m) e^(-2 pi m y / 7) should equal y^(-k-1) f(1/y)
    const Real rhs = g * pow(yy, -(k + 1));
    return abs(f - rhs) / abs(f);
}

double zero_scan_step(long n) { return std::numbers::pi / (4 * std::log(2.0 * n + 4)); }

CriticalLine::CriticalLine(long n, double t_max, const PrecisionContext& ctx)
    : n_(n), np_(2 * n - 1), t_max_(t_max), ctx_(ctx) {
    ctx.validate();
    if (n < 1) throw std::invalid_argument("CriticalLine: n must be positive");
    if (!(t_max >= 0) || t_max > 1000) throw std::invalid_argument("CriticalLine: t_max must lie in [0, 1000]");
    const double npd = static_cast<double>(np_);
    // Z(t) = I(t) Gamma(n') / |Gamma(n' + it)|: I loses this many digits to cancellation
    const double cancel = std::max(0.0, std::lgamma(npd) - re_lgamma(npd, t_max)) / kLn10;
    wd_ = ctx.digits + static_cast<int>(std::ceil(cancel)) + 3;
    const PrecisionContext wctx = ctx.with_digits(wd_);
    wctx.validate();

    // window where g(z) = z^n' e^-z / Gamma(n') is above 10^-(wd+5)
    const double lg = std::lgamma(npd);
    auto g = [&](double z) { return npd * std::log(z) - z - lg; };
    const double thr = -(wd_ + 5) * kLn10;
    double lo = std::log(1e-300), hi = std::log(npd);
    if (g(std::exp(lo)) >= thr) {
        z_lo_ = 0;
    } else {
        for (int i = 0; i < 200; ++i) {
            const double mid = (lo + hi) / 2;
            (g(std::exp(mid)) < thr ? lo : hi) = mid;
        }
        z_lo_ = std::exp(lo);
    }
    auto upper = [&](double level) {
        double a = npd, b = 2 * npd + 10;
        while (g(b) >= level) b *= 2;
        for (int i = 0; i < 200; ++i) {
            const double mid = (a + b) / 2;
            (g(mid) >= level ? a : b) = mid;
        }
        return b;
    };
    z_hi_ = upper(thr);
    const double z_U = upper(thr - 3 * kLn10);
    U_ = std::log(kQ * z_U);
    M_ = static_cast<long>(std::floor(kQ * z_U)) + 1;
    check_cap(M_, k(), "CriticalLine");

    ScopedPrecision sp(wctx);
    const auto table = field::CoeffTable::build(k(), M_, wctx);
    b_.assign(static_cast<size_t>(M_) + 1, Real(0));
    log_m_.assign(static_cast<size_t>(M_) + 1, Real(0));
    for (long m = 1; m <= M_; ++m) {
        const Real rm(m);
        b_[static_cast<size_t>(m)] = table.normalized[static_cast<size_t>(m)] / sqrt(rm);
        log_m_[static_cast<size_t>(m)] = log(rm);
    }
    log_Q_ = log(Real(7) / (2 * const_pi()));
    lgamma_np_ = lgamma(Real(np_));

    double h = std::min({std::numbers::pi / std::max(t_max, 1.0), 1 / std::sqrt(npd), 0.5});
    h *= std::min(1.0, 40.0 / wd_);
    std::vector<Real> u0, w0, u1, w1;
    build_nodes(h, u0, w0);
    const Real tol = pow10_neg(wd_ - 3);
    for (int halvings = 0;; ++halvings) {
        h /= 2;
        build_nodes(h, u1, w1);
        Real diff(0);
        for (double t : {0.0, t_max}) diff = max(diff, abs(integral(u1, w1, t) - integral(u0, w0, t)));
        if (diff <= tol) break;
        if (halvings == 6) {
            throw std::runtime_error("CriticalLine: theta integral did not converge (difference " +
                                     diff.to_string(3) + ")");
        }
        u0 = std::move(u1);
        w0 = std::move(w1);
    }
    u_ = std::move(u1);
    wF_ = std::move(w1);
}

void CriticalLine::build_nodes(double h, std::vector<Real>& u, std::vector<Real>& wF) const {
    ScopedPrecision sp(ctx_.with_digits(wd_));
    const long panels = std::max<long>(1, static_cast<long>(std::ceil(U_ / h)));
    const auto rule = quad::gauss_legendre(32);
    const size_t order = rule->nodes.size();
    const size_t total = static_cast<size_t>(panels) * order;
    u.assign(total, Real(0));
    wF.assign(total, Real(0));
    const Real Ur(U_);
    const Real width = Ur / Real(panels);
    const Real half = width / 2;
    const Real rQ(kQ);
    const mpfr_prec_t bits = working_bits();
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(total); ++i) {
        ScopedPrecision tsp(bits);
        const size_t idx = static_cast<size_t>(i);
        const long p = i / static_cast<long>(order);
        const size_t j = idx % order;
        const Real ui = width * Real(p) + half + half * rule->nodes[j];
        const Real eu_over_Q = exp(ui - log_Q_);
        const double ud = ui.to_double();
        const long m_lo = std::max<long>(1, static_cast<long>(std::ceil(kQ * z_lo_ * std::exp(-ud))));
        const long m_hi = std::min<long>(M_, static_cast<long>(std::floor(kQ * z_hi_ * std::exp(-ud))));
        Real F(0);
        const Real base = ui - log_Q_;
        for (long m = m_lo; m <= m_hi; ++m) {
            const Real& bm = b_[static_cast<size_t>(m)];
            if (bm.is_zero()) continue;
            const Real lg = Real(np_) * (log_m_[static_cast<size_t>(m)] + base) - Real(m) * eu_over_Q - lgamma_np_;
            F += bm * exp(lg);
        }
        u[idx] = ui;
        wF[idx] = half * rule->weights[j] * F;
    }
}

Real CriticalLine::integral(const std::vector<Real>& u, const std::vector<Real>& wF, double t) const {
    ScopedPrecision sp(ctx_.with_digits(wd_));
    const Real tt(t);
    Real sum(0);
    for (size_t i = 0; i < u.size(); ++i) sum += wF[i] * cos(tt * u[i]);
    return 2 * sum;
}

void CriticalLine::check_t(double t) const {
    if (!(std::fabs(t) <= t_max_ * (1 + 1e-12)))
        throw std::out_of_range("CriticalLine: |t| exceeds the height the node set was built for");
}

Real CriticalLine::scaled_Z(double t) const {
    check_t(t);
    return integral(u_, wF_, t);
}

Real CriticalLine::hardy_Z(double t) const {
    check_t(t);
    const PrecisionContext wctx = ctx_.with_digits(wd_);
    ScopedPrecision sp(wctx);
    const Complex lgz = specfun::lgamma(Complex(Real(np_), Real(t)), wctx);
    return integral(u_, wF_, t) * exp(lgamma_np_ - lgz.re);
}

Complex CriticalLine::completed_lambda(double t) const {
    check_t(t);
    ScopedPrecision sp(ctx_.with_digits(wd_));
    // Q^-a int_1^inf f(y) (y^(s+a) + y^(1-s+a)) dy/y with y = e^u, s = 1/2 + it
    const Real tt(t);
    Complex sum;
    for (size_t i = 0; i < u_.size(); ++i) {
        const Complex up = exp(Complex(Real(0), tt * u_[i]));
        const Complex down = exp(Complex(Real(0), -(tt * u_[i])));
        sum += (up + down) * wF_[i];
    }
    const Real pre = exp(log_Q_ / 2 + lgamma_np_);
    return sum * pre;
}

Complex CriticalLine::completed_lambda_at(const Complex& s) const {
    if (abs(s.re - Real(0.5)) > Real(3)) throw std::out_of_range("completed_lambda_at: Re s too far from 1/2");
    check_t(std::fabs(s.im.to_double()));
    ScopedPrecision sp(ctx_.with_digits(wd_));
    const Complex w = s - Complex(Real(1) / 2);
    Complex sum;
    for (size_t i = 0; i < u_.size(); ++i) sum += (exp(w * u_[i]) + exp(-w * u_[i])) * wF_[i];
    return sum * exp(log_Q_ / 2 + lgamma_np_);
}

ZeroRecord CriticalLine::zeros(double T) const {
    if (!(T > 0)) throw std::invalid_argument("zeros: T must be positive");
    check_t(T);
    ZeroRecord rec;
    rec.n = n_;
    rec.t_max = T;
    const double step = zero_scan_step(n_);
    std::vector<double> grid;
    for (long j = 0; j * step < T; ++j) grid.push_back(static_cast<double>(j) * step);
    grid.push_back(T);
    std::vector<double> vals(grid.size());
    const mpfr_prec_t bits = digits_to_bits(ctx_.with_digits(wd_).total_digits());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(grid.size()); ++i) {
        ScopedPrecision tsp(bits);
        vals[static_cast<size_t>(i)] = scaled_Z(grid[static_cast<size_t>(i)]).to_double();
    }
    auto f = [this](double t) { return scaled_Z(t).to_double(); };
    auto tol = [](double a, double b) { return std::fabs(b - a) < 1e-10; };
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double fa = vals[i], fb = vals[i + 1];
        if (fa == 0 && i > 0) {
            rec.gammas.push_back(grid[i]);
            continue;
        }
        if ((fa < 0) == (fb < 0) || fb == 0) continue;
        std::uintmax_t iters = 200;
        const auto br = boost::math::tools::toms748_solve(f, grid[i], grid[i + 1], fa, fb, tol, iters);
        rec.gammas.push_back((br.first + br.second) / 2);
    }
    if (vals.back() == 0) rec.gammas.push_back(T);
    const double L = std::log(2.0 * n_);
    for (double g : rec.gammas) {
        rec.scaled.push_back(g * L / std::numbers::pi);
        rec.max_abs_Z = std::max(rec.max_abs_Z, std::fabs(hardy_Z(g).to_double()));
    }
    rec.main_term = T / std::numbers::pi * L;
    rec.expected_count = (T * std::log(kQ) + im_lgamma(static_cast<double>(np_), T)) / std::numbers::pi;
    const double count = static_cast<double>(rec.gammas.size());
    rec.main_term_ok = std::fabs(count - rec.main_term) <= 5 + L;
    if (std::fabs(count - rec.expected_count) > 2.5) {
        rec.warning = true;
        std::ostringstream msg;
        msg << "count " << count << " differs from the smooth count " << rec.expected_count
            << " by more than 2.5 (possible missed zeros)";
        rec.message = msg.str();
    }
    return rec;
}

Complex completed_lambda(long n, double t, const PrecisionContext& ctx) {
    return CriticalLine(n, std::fabs(t), ctx).completed_lambda(t);
}

Real hardy_Z(long n, double t, const PrecisionContext& ctx) { return CriticalLine(n, std::fabs(t), ctx).hardy_Z(t); }

ZeroRecord zeros_up_to(long n, double T, const PrecisionContext& ctx) {
    return CriticalLine(n, T, ctx).zeros(T);
}

}  // namespace hecke::lcentral
