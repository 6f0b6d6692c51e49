#include "hecke/density.hpp"

#include "hecke/field_arith.hpp"
#include "hecke/quadrature.hpp"
#include "hecke/specfun.hpp"
#include "hecke/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hecke::density {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLogQ = std::log(7.0 / (2 * kPi));

const PrecisionContext& low_ctx() {
    static const PrecisionContext c{20, 5};
    return c;
}

// Gauss-Legendre nodes and weights on [-1, 1] in double
const std::vector<std::pair<double, double>>& gl(int order) {
    static std::mutex mu;
    static std::vector<std::pair<int, std::vector<std::pair<double, double>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [o, r] : cache)
        if (o == order) return r;
    ScopedPrecision sp(low_ctx());
    const auto rule = quad::gauss_legendre(order);
    std::vector<std::pair<double, double>> r;
    for (size_t i = 0; i < rule->nodes.size(); ++i) r.emplace_back(rule->nodes[i].to_double(), rule->weights[i].to_double());
    cache.emplace_back(order, std::move(r));
    return cache.back().second;
}

struct Node {
    double y;
    double w;
};

// Gauss-Legendre nodes on [a, b] in panels aligned to multiples of h.
std::vector<Node> panel_nodes(double a, double b, double h, int order) {
    std::vector<Node> out;
    if (!(b > a)) return out;
    const auto& r = gl(order);
    double lo = a;
    double next = (std::floor(a / h + 1e-12) + 1) * h;
    while (lo < b) {
        const double hi = std::min(next, b);
        if (hi - lo > 1e-14) {
            const double mid = (lo + hi) / 2, half = (hi - lo) / 2;
            for (const auto& [x, w] : r) out.push_back({mid + half * x, w * half});
        }
        lo = hi;
        next += h;
    }
    return out;
}

cplx to_cplx(const Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

cplx psi_seed(double x, double v) {
    ScopedPrecision sp(low_ctx());
    return to_cplx(specfun::digamma(Complex(Real(x), Real(v)), low_ctx()));
}

// Re psi(2n - 1 + iv) for n = n_from..n_to via psi(z + 2) = psi(z) + 1/z + 1/(z + 1)
void psi_row(long n_from, long n_to, double v, double* out) {
    cplx z(2.0 * n_from - 1, v);
    cplx psi = psi_seed(z.real(), v);
    for (long n = n_from; n <= n_to; ++n) {
        out[n - n_from] = psi.real();
        psi += 1.0 / z + 1.0 / (z + 1.0);
        z += 2.0;
    }
}

// Range in y of the archimedean integral and how to close it.
struct ArchPlan {
    double panel = 0.5;
    double end = 0;
    bool fejer_tail = false;
};

ArchPlan arch_plan(const TestFunction& f, double y0) {
    ArchPlan p;
    switch (f.kind) {
        case TestFunction::Kind::fejer: {
            const double a = f.param;
            p.panel = 1 / (2 * a);
            p.end = (std::ceil(y0 * a) + 400) / a;  // a multiple of 1/a
            p.fejer_tail = true;
            break;
        }
        case TestFunction::Kind::gaussian:
            p.panel = f.param / 4;
            p.end = f.param * std::sqrt(std::log(1e20) / kPi);
            break;
        case TestFunction::Kind::custom:
            p.panel = 0.5;
            p.end = f.custom_extent;
            break;
    }
    return p;
}

// integral_Y^inf (log Q + (1/2) log(a^2 + b^2 y^2)) / y^2 dy
double log_tail(double a, double b, double Y) {
    return kLogQ / Y + 0.5 * (std::log(a * a + b * b * Y * Y) / Y + (2 * b / a) * (kPi / 2 - std::atan(b * Y / a)));
}

std::vector<double> arch_range(long n_from, long n_to, const ScaledTest& phi, double t0, const PrecisionContext& ctx) {
    (void)ctx;
    if (n_from < 1 || n_to < n_from) throw std::invalid_argument("archimedean: bad family range");
    const size_t count = static_cast<size_t>(n_to - n_from + 1);
    const double L = phi.L;
    const double y0 = std::max(0.0, t0 * L / kPi);
    const ArchPlan plan = arch_plan(phi.f, y0);
    const auto nodes = panel_nodes(y0, plan.end, plan.panel, 10);
    std::vector<double> rows(nodes.size() * count);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(nodes.size()); ++i) {
        const auto& nd = nodes[static_cast<size_t>(i)];
        psi_row(n_from, n_to, kPi * nd.y / L, &rows[static_cast<size_t>(i) * count]);
    }
    std::vector<double> out(count, 0.0);
    for (size_t i = 0; i < nodes.size(); ++i) {
        const double fw = phi.f.f(nodes[i].y) * nodes[i].w;
        if (fw == 0) continue;
        for (size_t j = 0; j < count; ++j) out[j] += fw * (kLogQ + rows[i * count + j]);
    }
    if (plan.fejer_tail) {
        // past Y, sin^2 averages to 1/2 and Re psi(n' + iv) = log|n' + iv| + O(1/v)
        const double a = phi.f.param;
        for (size_t j = 0; j < count; ++j) {
            const double np = 2.0 * (n_from + static_cast<long>(j)) - 1;
            out[j] += log_tail(np, kPi / L, plan.end) / (2 * kPi * kPi * a * a);
        }
    }
    for (auto& v : out) v *= 2 / L;
    return out;
}

struct PrimeWeights {
    std::vector<size_t> index;  // into PrimeTable
    std::vector<int> r;
    std::vector<double> w;  // log p / p^(r/2) * f-hat(r log p / 2L)
};

std::shared_ptr<const PrimeTable> cached_table(long kmax, const PrecisionContext& ctx) {
    static std::mutex mu;
    static std::shared_ptr<const PrimeTable> table;
    static long built = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (kmax > built) {
        built = std::max(kmax, 2 * built);
        table = std::make_shared<const PrimeTable>(PrimeTable::build(built, ctx));
    }
    return table;
}

double k_limit(const ScaledTest& phi) {
    const double s = phi.f.fhat_cutoff(1e-12);
    const double lk = 2 * phi.L * s;
    if (lk > std::log(5e7)) throw ComputeCapError("explicit formula: prime powers beyond 5e7 needed; use a narrower f-hat");
    return std::exp(lk);
}

std::vector<ExplicitFormula> explicit_range(long n_from, long n_to, const ScaledTest& phi, const PrecisionContext& ctx) {
    const double kmax = k_limit(phi);
    const auto table_ptr = cached_table(std::max(2L, static_cast<long>(kmax)), ctx);
    const PrimeTable& table = *table_ptr;
    PrimeWeights pw;
    for (size_t i = 0; i < table.primes.size(); ++i) {
        const long p = table.primes[i];
        if (p > kmax) break;
        if (p == 7) continue;  // no Euler factor at the ramified prime
        const double lp = std::log(static_cast<double>(p));
        double pk = static_cast<double>(p);
        for (int r = 1; pk <= kmax; ++r, pk *= static_cast<double>(p)) {
            // every r is kept, even at weight 0: the c_r recurrence steps through them
            pw.index.push_back(i);
            pw.r.push_back(r);
            pw.w.push_back(lp / std::sqrt(pk) * phi.f.fhat(r * lp / (2 * phi.L)));
        }
    }
    const auto arch = arch_range(n_from, n_to, phi, 0, ctx);
    std::vector<ExplicitFormula> out(static_cast<size_t>(n_to - n_from + 1));
#pragma omp parallel for schedule(static)
    for (long n = n_from; n <= n_to; ++n) {
        ExplicitFormula& e = out[static_cast<size_t>(n - n_from)];
        e.n = n;
        e.k_max = kmax;
        e.archimedean = arch[static_cast<size_t>(n - n_from)];
        size_t last = std::numeric_limits<size_t>::max();
        double a = 0, cm1 = 0, c = 0;
        for (size_t j = 0; j < pw.w.size(); ++j) {
            if (pw.index[j] != last) {
                last = pw.index[j];
                a = table.a(n, last);
                cm1 = 2;  // c_0
                c = a;    // c_1
            } else {
                const double next = a * c - cm1;
                cm1 = c;
                c = next;
            }
            const double term = -pw.w[j] * c / phi.L;
            if (pw.r[j] == 1)
                e.primes_r1 += term;
            else if (pw.r[j] == 2)
                e.primes_r2 += term;
            else
                e.primes_r3 += term;
        }
        e.total = e.archimedean + e.primes_r1 + e.primes_r2 + e.primes_r3;
    }
    return out;
}

// ratios pieces

void check_ratios_shift(cplx z) {
    if (!(std::fabs(z.real()) < 0.25)) throw std::domain_error("ratios_A: shift needs |Re| < 1/4");
}

std::shared_ptr<const std::vector<long>> primes_cached(long P) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<long>> primes;
    static long built = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (P > built) {
        primes = std::make_shared<const std::vector<long>>(field::primes_up_to(P));
        built = P;
    }
    return primes;
}

// local factor minus 1, without the cancellation of forming 1 + O(p^-2) first
cplx local_deviation(long p, cplx alpha, cplx gamma) {
    const double lp = std::log(static_cast<double>(p));
    const cplx x = std::exp(-(1.0 + alpha + gamma) * lp);
    const cplx y = std::exp(-(1.0 + 2.0 * gamma) * lp);
    if (p == 7) return (x - y) / (1.0 - x);
    const int c = specfun::chi7(p);
    if (c == 1) return -(x - y) * (x - y) / ((1.0 - x) * (1.0 - x));
    if (c == -1) return (x * x - y * y) / (1.0 - x * x);
    throw std::invalid_argument("ratios_local_factor: p must be prime");
}

cplx clog1p(cplx d) {
    if (std::abs(d) < 1e-4) return d * (1.0 - d * (0.5 - d * (1.0 / 3 - d * 0.25)));
    return std::log(1.0 + d);
}

cplx A_product(cplx alpha, cplx gamma, const std::vector<long>& primes, long P) {
    cplx s(0.0);
    for (long p : primes) {
        if (p > P) break;
        s += clog1p(local_deviation(p, alpha, gamma));
    }
    return std::exp(s);
}

cplx A_prime_fd(cplx r, const std::vector<long>& primes, long P) {
    const double h = 1e-6;
    auto D = [&](double s) { return (A_product(r + s, r, primes, P) - A_product(r - s, r, primes, P)) / (2 * s); };
    return (4.0 * D(h) - D(2 * h)) / 3.0;
}

// Re of the bracket / 2 pi for n = n_from..n_to at t (|t| >= 1e-3)
std::vector<double> ratios_row(long n_from, long n_to, double t, const std::vector<long>& primes, long P) {
    const PrecisionContext& lc = low_ctx();
    ScopedPrecision sp(lc);
    const Complex s1(Real(1), Real(2 * t));
    const Complex s2(Real(1), Real(-2 * t));
    const cplx zeta_ratio = to_cplx(specfun::zeta(s1, 1, lc) / specfun::zeta(s1, 0, lc));
    const cplx L_ratio = to_cplx(specfun::dirichlet_L_chi7(s1, 1, lc) / specfun::dirichlet_L_chi7(s1, 0, lc));
    const cplx zeta1 = to_cplx(specfun::zeta(s1, 0, lc));
    const cplx Lm = to_cplx(specfun::dirichlet_L_chi7(s2, 0, lc));
    const double L1 = specfun::constants(lc).L1_chi7.to_double();
    const cplx it(0, t);
    const cplx Ap = A_prime_fd(it, primes, P);
    const cplx Am = A_product(-it, it, primes, P);
    const cplx common = -zeta_ratio + L_ratio + Ap;
    const cplx B = zeta1 * Lm / L1 * Am * std::exp(cplx(0, -2 * t * kLogQ));

    const size_t count = static_cast<size_t>(n_to - n_from + 1);
    std::vector<double> out(count);
    // G_n = Gamma(n' - it) / Gamma(n' + it), stepped by Gamma(z + 2) = z (z + 1) Gamma(z)
    double np = 2.0 * n_from - 1;
    const double im_lg = to_cplx(specfun::lgamma(Complex(Real(np), Real(t)), lc)).imag();
    cplx G = std::exp(cplx(0, -2 * im_lg));
    cplx z(np, t);
    cplx psi = to_cplx(specfun::digamma(Complex(Real(np), Real(t)), lc));
    for (size_t j = 0; j < count; ++j) {
        const double bracket = 2 * kLogQ + 2 * psi.real() + 2 * (common - G * B).real();
        out[j] = bracket / (2 * kPi);
        psi += 1.0 / z + 1.0 / (z + 1.0);
        G *= std::conj(z) * std::conj(z + 1.0) / (z * (z + 1.0));
        z += 2.0;
    }
    return out;
}

constexpr double kSmallT = 1e-3;

std::vector<double> ratios_row_safe(long n_from, long n_to, double t, const std::vector<long>& primes, long P) {
    if (std::fabs(t) >= kSmallT) return ratios_row(n_from, n_to, std::fabs(t), primes, P);
    // even in t: I(h) = I(0) + c h^2 + O(h^4)
    const auto a = ratios_row(n_from, n_to, kSmallT, primes, P);
    const auto b = ratios_row(n_from, n_to, 2 * kSmallT, primes, P);
    std::vector<double> out(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        out[j] = (4 * a[j] - b[j]) / 3;
        if (!std::isfinite(out[j]) || std::fabs(a[j] - b[j]) > 1e-2 * (1 + std::fabs(a[j])))
            throw std::runtime_error("ratios integrand: no stable limit at t = 0");
    }
    return out;
}

}  // namespace

TestFunction TestFunction::fejer(double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("fejer: support must be positive");
    TestFunction t;
    t.kind = Kind::fejer;
    t.param = alpha;
    return t;
}

TestFunction TestFunction::gaussian(double w) {
    if (!(w > 0)) throw std::invalid_argument("gaussian: width must be positive");
    TestFunction t;
    t.kind = Kind::gaussian;
    t.param = w;
    return t;
}

TestFunction TestFunction::custom(std::function<double(double)> f, std::function<double(double)> fhat, double support,
                                  double extent) {
    TestFunction t;
    t.kind = Kind::custom;
    t.f_custom = std::move(f);
    t.fhat_custom = std::move(fhat);
    t.custom_support = support;
    t.custom_extent = extent;
    return t;
}

double TestFunction::f(double y) const {
    switch (kind) {
        case Kind::fejer: {
            const double z = kPi * param * y;
            if (std::fabs(z) < 1e-8) return 1 - z * z / 3;
            const double s = std::sin(z) / z;
            return s * s;
        }
        case Kind::gaussian:
            return std::exp(-kPi * y * y / (param * param));
        case Kind::custom:
            return f_custom(y);
    }
    return 0;
}

double TestFunction::fhat(double x) const {
    switch (kind) {
        case Kind::fejer:
            return std::max(0.0, 1 - std::fabs(x) / param) / param;
        case Kind::gaussian:
            return param * std::exp(-kPi * param * param * x * x);
        case Kind::custom:
            return fhat_custom(x);
    }
    return 0;
}

double TestFunction::fhat_cutoff(double tol) const {
    switch (kind) {
        case Kind::fejer:
            return param;
        case Kind::gaussian:
            return param <= tol ? 0.0 : std::sqrt(std::log(param / tol) / kPi) / param;
        case Kind::custom:
            if (custom_support > 0) return custom_support;
            throw std::invalid_argument("custom test function without a support bound");
    }
    return 0;
}

std::string TestFunction::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::fejer:
            os << "fejer(alpha=" << param << ")";
            break;
        case Kind::gaussian:
            os << "gaussian(w=" << param << ")";
            break;
        case Kind::custom:
            os << "custom";
            break;
    }
    return os.str();
}

double ScaledTest::phihat(double x) const { return kPi / L * f.fhat(kPi * x / L); }

Real lambda_vm(long n, long p, long r, const PrecisionContext& ctx) {
    if (n < 1 || r < 1 || !field::is_prime(p)) throw std::invalid_argument("lambda_vm: bad arguments");
    ScopedPrecision sp(ctx);
    if (p == 7) return Real(0);
    const Real a = field::normalized_coeff(4 * n - 3, p, ctx);
    // c_r = alpha^r + conj(alpha)^r with |alpha| = 1: c_r = a c_(r-1) - c_(r-2)
    Real cm1(2), c = a;
    for (long j = 2; j <= r; ++j) {
        Real next = a * c - cm1;
        cm1 = c;
        c = next;
    }
    return log(Real(p)) * c;
}

PrimeTable PrimeTable::build(long max_p, const PrecisionContext& ctx) {
    PrimeTable t;
    t.primes = field::primes_up_to(max_p);
    t.cls.resize(t.primes.size());
    t.reps.resize(t.primes.size());
    const PrecisionContext& lc = low_ctx();
    (void)ctx;
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < static_cast<long>(t.primes.size()); ++i) {
        const size_t u = static_cast<size_t>(i);
        const long p = t.primes[u];
        const auto cls = field::prime_class(p);
        t.cls[u] = cls == field::PrimeClass::split ? 0 : cls == field::PrimeClass::inert ? 1 : 2;
        if (cls != field::PrimeClass::split) continue;
        ScopedPrecision sp(lc);
        for (const auto& rep : field::representations(p)) {
            if (!field::is_half_representative(rep)) continue;
            t.reps[u].emplace_back(field::epsilon(rep.a, rep.b), field::theta(rep.a, rep.b, lc).to_double());
        }
    }
    return t;
}

double PrimeTable::a(long n, size_t i) const {
    if (cls[i] != 0) return 0;
    const double k = 4.0 * n - 3;
    double s = 0;
    for (const auto& [eps, th] : reps[i]) {
        const double frac = std::fmod(k * th, 1.0);
        s += eps * std::cos(2 * kPi * frac);
    }
    return s;
}

ExplicitFormula explicit_formula_sum(long n, const ScaledTest& phi, const PrecisionContext& ctx) {
    if (n < 1) throw std::invalid_argument("explicit_formula_sum: n must be positive");
    return explicit_range(n, n, phi, ctx).front();
}

std::vector<ExplicitFormula> explicit_formula_family(long N, const ScaledTest& phi, const PrecisionContext& ctx) {
    if (N < 1) throw std::invalid_argument("explicit_formula_family: N must be positive");
    return explicit_range(1, N, phi, ctx);
}

std::vector<double> archimedean_family(long N, const ScaledTest& phi, double t0, const PrecisionContext& ctx) {
    return arch_range(1, N, phi, t0, ctx);
}

double zero_sum(const std::vector<double>& gammas, const ScaledTest& phi) {
    double s = 0;
    for (double g : gammas) s += 2 * phi.phi(g);
    return s;
}

RmtValue rmt_prediction(const TestFunction& f, const PrecisionContext& ctx) {
    (void)ctx;
    RmtValue out;
    // f-hat(0) + integral_0^1 f-hat, split at a kink inside [0, 1]
    double kink = 1;
    if (f.kind == TestFunction::Kind::fejer) kink = std::min(1.0, f.param);
    if (f.kind == TestFunction::Kind::custom && f.custom_support > 0) kink = std::min(1.0, f.custom_support);
    if (f.kind == TestFunction::Kind::fejer) {
        // the triangle integrates in closed form: 1/a + (m - m^2/(2a))/a with m = min(1, a)
        const double a = f.param, m = kink;
        out.fhat_form = 1 / a + (m - m * m / (2 * a)) / a;
    } else {
        double s = 0;
        for (const auto& nd : panel_nodes(0, kink, kink / 64, 10)) s += nd.w * f.fhat(nd.y);
        for (const auto& nd : panel_nodes(kink, 1, (1 - kink) / 64 + 1e-300, 10)) s += nd.w * f.fhat(nd.y);
        out.fhat_form = f.fhat(0) + s;
    }

    // 2 integral_0^inf f(y) (1 + sin(2 pi y)/(2 pi y)) dy
    auto g = [&](double y) {
        const double z = 2 * kPi * y;
        return f.f(y) * (1 + (std::fabs(z) < 1e-8 ? 1 - z * z / 6 : std::sin(z) / z));
    };
    double d = 0;
    if (f.kind == TestFunction::Kind::fejer) {
        const double a = f.param;
        const double Y = 10000 / a;
        for (const auto& nd : panel_nodes(0, Y, std::min(0.5, 1 / (2 * a)), 10)) d += nd.w * g(nd.y);
        // integral_Y^inf f = 1/(2 pi^2 a^2 Y) - 1/(4 pi^4 a^4 Y^3) + O(Y^-5); the sine part is O(Y^-3)
        d += 1 / (2 * kPi * kPi * a * a * Y) - 1 / (4 * std::pow(kPi * a, 4) * Y * Y * Y);
    } else {
        const double Y = f.kind == TestFunction::Kind::gaussian ? f.param * std::sqrt(std::log(1e20) / kPi) : f.custom_extent;
        const double h = f.kind == TestFunction::Kind::gaussian ? std::min(0.25, f.param / 8) : 0.25;
        for (const auto& nd : panel_nodes(0, Y, h, 10)) d += nd.w * g(nd.y);
    }
    out.direct_form = 2 * d;
    return out;
}

DensityReport one_level_from_zeros(long N, const TestFunction& f, double T, const std::vector<std::vector<double>>& gammas,
                                   int warnings, const PrecisionContext& ctx) {
    if (N < 2) throw std::invalid_argument("one-level density: N must be at least 2");
    if (gammas.size() < static_cast<size_t>(N)) throw std::invalid_argument("one-level density: too few zero lists");
    DensityReport rep;
    rep.N = N;
    rep.T = T;
    rep.testfn = f.describe();
    rep.warnings = warnings;
    const ScaledTest phi{f, std::log(static_cast<double>(N))};
    for (long n = 0; n < N; ++n) {
        for (double g : gammas[static_cast<size_t>(n)])
            if (g <= T) rep.empirical_raw += 2 * phi.phi(g);
    }
    rep.empirical_raw /= static_cast<double>(N);
    for (double v : archimedean_family(N, phi, T, ctx)) rep.tail_correction += v;
    rep.tail_correction /= static_cast<double>(N);
    rep.empirical = rep.empirical_raw + rep.tail_correction;

    for (const auto& e : explicit_formula_family(N, phi, ctx)) {
        rep.explicit_formula += e.total;
        rep.primes_split += e.primes_r1;
        rep.primes_squares += e.primes_r2;
        rep.primes_higher += e.primes_r3;
    }
    const double dn = static_cast<double>(N);
    rep.explicit_formula /= dn;
    rep.primes_split /= dn;
    rep.primes_squares /= dn;
    rep.primes_higher /= dn;

    rep.rmt = rmt_prediction(f, ctx).fhat_form;
    rep.v = rep.rmt;
    rep.nonvanishing_lower_bound = std::clamp((2 - rep.v) / 2, 0.0, 1.0);
    rep.empirical_bound = std::clamp((2 - rep.empirical) / 2, 0.0, 1.0);
    return rep;
}

DensityReport empirical_one_level(long N, const TestFunction& f, double T, const PrecisionContext& ctx) {
    const auto recs = sweep::zeros(N, T, ctx);
    std::vector<std::vector<double>> gammas;
    int warnings = 0;
    for (const auto& r : recs) {
        gammas.push_back(r.gammas);
        if (r.warning) ++warnings;
    }
    return one_level_from_zeros(N, f, T, gammas, warnings, ctx);
}

cplx ratios_local_factor(long p, cplx alpha, cplx gamma) { return 1.0 + local_deviation(p, alpha, gamma); }

RatiosA ratios_A(cplx alpha, cplx gamma, long P) {
    check_ratios_shift(alpha);
    check_ratios_shift(gamma);
    if (P < 7) throw std::invalid_argument("ratios_A: P must be at least 7");
    RatiosA out;
    out.P = P;
    out.value = A_product(alpha, gamma, *primes_cached(P), P);
    // |log factor| <= 1.5 (|x| + |y|)^2 for p > P; sum over m > P of m^(-2s)
    const double s = 1 + std::min((alpha + gamma).real(), 2 * gamma.real());
    out.tail_bound = 1.5 * 4 * std::pow(static_cast<double>(P), 1 - 2 * s) / (2 * s - 1);
    return out;
}

cplx ratios_A_prime(cplx r, long P) {
    check_ratios_shift(r);
    return A_prime_fd(r, *primes_cached(P), P);
}

cplx ratios_A_prime_closed(cplx r, long P) {
    cplx s(0.0);
    for (long p : *primes_cached(P)) {
        if (p > P) break;
        const double lp = std::log(static_cast<double>(p));
        const cplx x = std::exp(-(1.0 + 2.0 * r) * lp);
        if (p == 7)
            s -= lp * x / (1.0 - x);
        else if (specfun::chi7(p) == -1)
            s -= 2 * lp * x * x / (1.0 - x * x);
    }
    return s;
}

double ratios_one_level_integrand(long n, double t, const PrecisionContext& ctx) {
    (void)ctx;
    if (n < 1) throw std::invalid_argument("ratios integrand: n must be positive");
    const long P = 100000;
    return ratios_row_safe(n, n, t, *primes_cached(P), P).front();
}

double ratios_one_level(long N, const TestFunction& f, const PrecisionContext& ctx) {
    (void)ctx;
    if (N < 2) throw std::invalid_argument("ratios_one_level: N must be at least 2");
    const long P = 100000;
    const auto primes_ptr = primes_cached(P);
    const auto& primes = *primes_ptr;
    const double L = std::log(static_cast<double>(N));
    double yend = 0, h = 0.25;
    switch (f.kind) {
        case TestFunction::Kind::gaussian:
            yend = f.param * std::sqrt(std::log(1e16) / kPi);
            h = f.param / 8;
            break;
        case TestFunction::Kind::fejer:
            yend = 400 / f.param;
            h = 1 / (2 * f.param);
            break;
        case TestFunction::Kind::custom:
            yend = f.custom_extent;
            break;
    }
    const auto nodes = panel_nodes(0, yend, h, 10);
    std::vector<double> rowsum(nodes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(nodes.size()); ++i) {
        const double t = kPi * nodes[static_cast<size_t>(i)].y / L;
        const auto row = ratios_row_safe(1, N, t, primes, P);
        double s = 0;
        for (double v : row) s += v;
        rowsum[static_cast<size_t>(i)] = s / static_cast<double>(N);
    }
    // 2 integral_0^inf phi(t) I(t) dt with t = pi y / L
    double total = 0;
    for (size_t i = 0; i < nodes.size(); ++i) total += nodes[i].w * f.f(nodes[i].y) * rowsum[i];
    return 2 * total * kPi / L;
}

}  // namespace hecke::density
