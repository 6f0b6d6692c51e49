#include "hecke/specfun.hpp"

#include "hecke/field_arith.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hecke::specfun {

int digits_for_exponent(long k, int base) {
    return std::max(base, 40 + static_cast<int>(std::ceil(0.02 * static_cast<double>(k))));
}

namespace {

// Internal evaluations run a few dozen bits above the requested precision and
// round on return.
constexpr mpfr_prec_t kExtraBits = 32;

Real round_to(const Real& x, const PrecisionContext& ctx) {
    Real r = Real::with_precision(ctx.bits());
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Complex round_to(const Complex& z, const PrecisionContext& ctx) {
    return {round_to(z.re, ctx), round_to(z.im, ctx)};
}

Real eps_for(const PrecisionContext& ctx) { return pow10_neg(ctx.total_digits() + 3); }

Complex cexp_neg_s_log(const Complex& s, const Real& la) {
    // exp(-s log a) for real log a
    return exp(Complex(-(s.re * la), -(s.im * la)));
}

}  // namespace

Real log_poisson_term(long j, const Real& x) {
    if (x.is_zero()) return j == 0 ? Real(0) : Real(-1) / Real(0);
    return Real(j) * log(x) - x - lgamma(Real(j + 1));
}

Real reg_gamma_Q(long n, const Real& x, const PrecisionContext& ctx) {
    ctx.validate();
    if (n < 1) throw std::invalid_argument("reg_gamma_Q: n must be positive");
    if (x.sign() < 0) throw std::invalid_argument("reg_gamma_Q: x must be nonnegative");
    if (n > 100000000L) throw ComputeCapError("reg_gamma_Q: n exceeds the supported range");
    if (x.is_zero()) return round_to(Real(1), ctx);
    ScopedPrecision sp(ctx.bits() + kExtraBits);
    const Real xx = round_to(x, ctx.with_digits(ctx.digits + 15));
    const Real eps = eps_for(ctx);

    if (xx < Real(n)) {
        // P(n, x) = sum_{j >= n} x^j e^-x / j!, terms decreasing from j = n
        Real t = exp(log_poisson_term(n, xx));
        Real P(0);
        for (long j = n;; ++j) {
            P += t;
            const Real ratio = xx / Real(j + 1);
            if (t * ratio / (Real(1) - ratio) <= eps * P) break;
            t *= ratio;
        }
        return round_to(Real(1) - P, ctx);
    }
    // Q(n, x) = sum_{j < n} x^j e^-x / j!, terms decreasing from j = n - 1 down
    Real t = exp(log_poisson_term(n - 1, xx));
    Real Q(0);
    for (long j = n - 1;; --j) {
        Q += t;
        if (j == 0) break;
        const Real ratio = Real(j) / xx;
        if (t * ratio / (Real(1) - ratio) <= eps * Q) break;
        t *= ratio;
    }
    return round_to(Q, ctx);
}

Real erfc(const Real& y, const PrecisionContext& ctx) {
    ctx.validate();
    ScopedPrecision sp(ctx);
    Real r;
    mpfr_erfc(r.raw(), round_to(y, ctx).raw(), MPFR_RNDN);
    return r;
}

Real tricomi_lhs(long n, const Real& y, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    const Real x = Real(n) - y * sqrt(Real(2 * n));
    if (x.sign() <= 0) return Real(0);
    return Real(1) - reg_gamma_Q(n + 1, x, ctx);
}

Real tricomi_rhs(long n, const Real& y, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    const Real corr = sqrt(Real(2)) / (Real(3) * sqrt(const_pi() * Real(n)));
    return erfc(y, ctx) / 2 - corr * (Real(1) + y * y) * exp(-(y * y));
}

Real gamma_rational(int j, const PrecisionContext& ctx) {
    if (j < 1 || j > 6) throw std::invalid_argument("gamma_rational: j must be in 1..6");
    ctx.validate();
    ScopedPrecision sp(ctx);
    return tgamma(Real(j) / Real(7));
}

mpq_class bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::mutex mu;
    static std::vector<mpq_class> cache{mpq_class(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        mpq_class acc = 0;
        mpz_class binom = 1;  // C(m+1, 0)
        for (int k = 0; k < m; ++k) {
            acc += mpq_class(binom) * cache[static_cast<size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        mpq_class b = -acc / mpq_class(m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[static_cast<size_t>(n)];
}

namespace {

Real bernoulli_real(int n) { return Real(bernoulli(n)); }

double asymptotic_threshold(const PrecisionContext& ctx) { return 0.4 * ctx.total_digits() + 10.0; }

}  // namespace

Real digamma(const Real& x, const PrecisionContext& ctx) {
    ctx.validate();
    if (x.sign() <= 0) throw std::invalid_argument("digamma: x must be positive");
    ScopedPrecision sp(ctx.bits() + kExtraBits);
    const Real eps = eps_for(ctx);
    const double x0 = asymptotic_threshold(ctx);
    Real z = round_to(x, ctx.with_digits(ctx.digits + 15));
    Real shift(0);
    while (z.to_double() < x0) {
        shift -= Real(1) / z;
        z += 1;
    }
    Real r = log(z) - Real(1) / (Real(2) * z);
    const Real z2 = z * z;
    Real zp = z2;
    for (int j = 1; j < 1000; ++j) {
        const Real term = bernoulli_real(2 * j) / (Real(2 * j) * zp);
        r -= term;
        if (abs(term) < eps) break;
        zp *= z2;
    }
    return round_to(r + shift, ctx);
}

Complex digamma(const Complex& z0, const PrecisionContext& ctx) {
    ctx.validate();
    ScopedPrecision sp(ctx.bits() + kExtraBits);
    const Real eps = eps_for(ctx);
    const double x0 = asymptotic_threshold(ctx);
    Complex z = z0;
    Complex shift;
    while (z.re.to_double() < x0) {
        if (z.re.is_zero() && z.im.is_zero()) throw std::domain_error("digamma: pole");
        shift -= Complex(Real(1)) / z;
        z.re += 1;
    }
    Complex r = log(z) - Complex(Real(1)) / (Real(2) * z);
    const Complex z2 = z * z;
    Complex zp = z2;
    for (int j = 1; j < 1000; ++j) {
        const Complex term = Complex(bernoulli_real(2 * j)) / (Real(2 * j) * zp);
        r -= term;
        if (abs(term) < eps) break;
        zp *= z2;
    }
    return round_to(r + shift, ctx);
}

Complex lgamma(const Complex& z0, const PrecisionContext& ctx) {
    ctx.validate();
    if (z0.re.sign() <= 0) throw std::domain_error("lgamma: requires Re z > 0");
    ScopedPrecision sp(ctx.bits() + kExtraBits);
    const Real eps = eps_for(ctx);
    const double x0 = asymptotic_threshold(ctx);
    Complex z = z0;
    Complex shift;
    while (z.re.to_double() < x0) {
        shift -= log(z);
        z.re += 1;
    }
    const Real half_log_2pi = log(Real(2) * const_pi()) / 2;
    Complex r = (z - Complex(Real(0.5))) * log(z) - z + Complex(half_log_2pi);
    const Complex z2 = z * z;
    Complex zp = z;
    for (int j = 1; j < 1000; ++j) {
        const Complex term = Complex(bernoulli_real(2 * j)) / (Real(2 * j) * Real(2 * j - 1) * zp);
        r += term;
        if (abs(term) < eps) break;
        zp *= z2;
    }
    return round_to(r + shift, ctx);
}

namespace {

struct EMResult {
    Complex value;
    Complex deriv;
    Real w;     // q + J
    Real logw;
};

// sum_{j<J} (q+j)^-s + w^-s / 2 + Euler-Maclaurin corrections, without the
// pole term w^(1-s)/(s-1). Adds the s-derivative when asked.
EMResult em_body(const Complex& s, const Real& q, bool want_deriv, const PrecisionContext& ctx) {
    const Real eps = eps_for(ctx);
    const double sabs = abs(s).to_double();
    const long J = static_cast<long>(ctx.total_digits() + 2.0 * sabs) + 10;
    EMResult out;
    for (long j = 0; j < J; ++j) {
        const Real a = q + Real(j);
        const Real la = log(a);
        const Complex e = cexp_neg_s_log(s, la);
        out.value += e;
        if (want_deriv) out.deriv -= e * la;
    }
    out.w = q + Real(J);
    out.logw = log(out.w);
    const Complex ew = cexp_neg_s_log(s, out.logw);
    out.value += ew / Real(2);
    if (want_deriv) out.deriv -= ew * out.logw / Real(2);

    Complex P = s;                 // s (s+1) ... (s+2i-2)
    Complex dP(Real(1), Real(0));  // its derivative in s
    Complex wpow = ew / out.w;     // w^(-s-2i+1)
    const Real w2 = out.w * out.w;
    mpz_class fact = 2;            // (2i)!
    for (int i = 1; i < 2000; ++i) {
        const Real c = bernoulli_real(2 * i) / Real(fact);
        const Complex term = P * wpow * c;
        out.value += term;
        Complex dterm;
        if (want_deriv) {
            dterm = (dP - P * out.logw) * wpow * c;
            out.deriv += dterm;
        }
        if (abs(term) < eps && (!want_deriv || abs(dterm) < eps)) break;
        for (int l : {2 * i - 1, 2 * i}) {
            const Complex f = s + Complex(Real(l));
            dP = dP * f + P;
            P = P * f;
        }
        wpow = wpow / w2;
        fact *= (2 * i + 1) * (2 * i + 2);
    }
    return out;
}

// (e^z - 1)/z and its derivative, both entire.
void expm1_ratio(const Complex& z, Complex& E, Complex& dE) {
    if (abs(z) < Real(0.5)) {
        const Real eps = pow(Real(2), -static_cast<long>(working_bits()) - 4);
        E = Complex(Real(1));
        dE = Complex(Real(0));
        Complex zk(Real(1));
        Real fact(1);  // (k+1)!
        for (int k = 1; k < 500; ++k) {
            const Complex dt = zk * Real(k);  // k z^(k-1), divided below
            zk = zk * z;
            fact *= Real(k + 1);
            E += zk / fact;
            dE += dt / fact;
            if (abs(zk / fact) < eps && abs(dt / fact) < eps) break;
        }
        return;
    }
    const Complex ez = exp(z);
    const Complex one(Real(1));
    E = (ez - one) / z;
    dE = (z * ez - ez + one) / (z * z);
}

}  // namespace

Complex hurwitz_zeta(const Complex& s, const Real& q, int order, const PrecisionContext& ctx) {
    ctx.validate();
    if (q.sign() <= 0) throw std::invalid_argument("hurwitz_zeta: q must be positive");
    if (abs(s - Complex(Real(1))) < Real(1e-30)) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    ScopedPrecision sp(ctx.bits() + kExtraBits);
    const EMResult em = em_body(s, q, order == 1, ctx);
    const Complex sm1 = s - Complex(Real(1));
    const Complex pole = cexp_neg_s_log(sm1, em.logw) / sm1;  // w^(1-s)/(s-1)
    if (order == 0) return round_to(em.value + pole, ctx);
    const Complex dpole = pole * (Complex(-em.logw) - Complex(Real(1)) / sm1);
    return round_to(em.deriv + dpole, ctx);
}

Real hurwitz_zeta(const Real& s, const Real& q, int order, const PrecisionContext& ctx) {
    return hurwitz_zeta(Complex(s, Real(0)), q, order, ctx).re;
}

Complex zeta(const Complex& s, int order, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    return hurwitz_zeta(s, Real(1), order, ctx);
}

int chi7(long n) { return field::legendre7(n); }

Complex dirichlet_L_chi7(const Complex& s, int order, const PrecisionContext& ctx) {
    ctx.validate();
    if (order != 0 && order != 1) throw std::invalid_argument("dirichlet_L_chi7: order must be 0 or 1");
    ScopedPrecision sp(ctx.bits() + kExtraBits);
    // L(s) = 7^-s sum_r chi(r) zeta(s, r/7). The pole terms w_r^(1-s)/(s-1)
    // cancel in the character sum; with u = 1 - s and l = log w_r they combine
    // to -sum chi(r) l E(u l), E(z) = (e^z - 1)/z, which is regular at s = 1.
    const Complex u = Complex(Real(1)) - s;
    Complex body, dbody;
    for (int r = 1; r <= 6; ++r) {
        const int c = chi7(r);
        const EMResult em = em_body(s, Real(r) / Real(7), order == 1, ctx);
        Complex E, dE;
        expm1_ratio(u * em.logw, E, dE);
        const Complex pole = -(E * em.logw);
        const Complex dpole = dE * (em.logw * em.logw);
        if (c > 0) {
            body += em.value + pole;
            if (order == 1) dbody += em.deriv + dpole;
        } else {
            body -= em.value + pole;
            if (order == 1) dbody -= em.deriv + dpole;
        }
    }
    const Real log7 = log(Real(7));
    const Complex scale = cexp_neg_s_log(s, log7);
    if (order == 0) return round_to(scale * body, ctx);
    return round_to(scale * (dbody - body * log7), ctx);
}

Real dirichlet_L_chi7(const Real& s, int order, const PrecisionContext& ctx) {
    return dirichlet_L_chi7(Complex(s, Real(0)), order, ctx).re;
}

const Constants& constants(const PrecisionContext& ctx) {
    ctx.validate();
    static std::mutex mu;
    static std::map<mpfr_prec_t, std::unique_ptr<Constants>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[ctx.bits()];
    if (!slot) {
        ScopedPrecision sp(ctx);
        auto c = std::make_unique<Constants>();
        const Real pi = const_pi();
        const Real s7 = sqrt(Real(7));
        c->euler_gamma = const_euler();
        c->zeta_at_2 = pi * pi / 6;
        c->zeta_prime_at_2 = hurwitz_zeta(Real(2), Real(1), 1, ctx);
        c->omega = gamma_rational(1, ctx) * gamma_rational(2, ctx) * gamma_rational(4, ctx) / (4 * pi * pi);
        c->two_pi_over_sqrt7 = 2 * pi / s7;
        c->three_pi_over_sqrt7 = 3 * pi / s7;
        c->L1_chi7 = dirichlet_L_chi7(Real(1), 0, ctx);
        c->Lprime1_chi7 = dirichlet_L_chi7(Real(1), 1, ctx);
        slot = std::move(c);
    }
    return *slot;
}

}  // namespace hecke::specfun
