#include "hecke/moments.hpp"

#include "hecke/field_arith.hpp"
#include "hecke/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hecke::moments {

namespace {

using cd = std::complex<double>;

cd to_cd(const Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

// delta(p^a, p^b)
int delta_prime_power(long p, long a, long b) {
    switch (field::prime_class(p)) {
        case field::PrimeClass::ramified:
            return (a == 0 && b == 0) ? 1 : 0;
        case field::PrimeClass::split:
            return (a + b) % 2 == 0 ? static_cast<int>(std::min(a, b)) + 1 : 0;
        case field::PrimeClass::inert:
            if (a % 2 != 0 || b % 2 != 0) return 0;
            return ((a + b) / 2) % 2 == 0 ? 1 : -1;
    }
    return 0;
}

void check_shift(const Complex& z, const char* what) {
    const double re = std::fabs(z.re.to_double());
    if (!(re < 0.25 - 1e-3)) throw std::domain_error(std::string(what) + ": shift needs |Re| < 1/4 - 1e-3");
}

double max_abs_re(const Complex& a, const Complex& b) {
    return std::max(std::fabs(a.re.to_double()), std::fabs(b.re.to_double()));
}

// mu_n(p^l): coefficients of 1 / L_p = 1 - a_n(p) p^-s + chi_0(p) p^-2s
Real mu_coeff(long p, long l, const Real& ap) {
    if (l == 0) return Real(1);
    if (l == 1) return -ap;
    if (l == 2) return p == 7 ? Real(0) : Real(1);
    return Real(0);
}

}  // namespace

MomentReport moment_from_values(int r, long N, const std::vector<sweep::FamilyCentral>& values,
                                const PrecisionContext& ctx) {
    if (r != 1 && r != 2) throw std::invalid_argument("moment order must be 1 or 2");
    if (N < 1 || static_cast<size_t>(N) > values.size()) throw std::invalid_argument("moment: N out of range");
    ScopedPrecision sp(ctx.with_digits(std::max(ctx.digits, 30)));
    MomentReport rep;
    rep.r = r;
    rep.N = N;
    Real s(0);
    for (long i = 0; i < N; ++i) {
        const Real& v = values[static_cast<size_t>(i)].value;
        s += r == 1 ? v : v * v;
    }
    rep.empirical = s / Real(N);
    const auto& c = specfun::constants(ctx);
    if (r == 1) {
        rep.predicted_main = c.two_pi_over_sqrt7;
        rep.predicted_constant_form = c.two_pi_over_sqrt7;
        rep.bound = 3 * log(Real(N)) / sqrt(Real(N));
    } else {
        const M2Prediction m = m2_conjecture(N, ctx);
        rep.predicted_main = m.displayed;
        rep.predicted_constant_form = m.reduced;
        rep.bound = Real(0);
    }
    rep.residual = rep.empirical - rep.predicted_main;
    return rep;
}

MomentReport empirical_moment(int r, long N, const PrecisionContext& ctx) {
    if (r != 1 && r != 2) throw std::invalid_argument("moment order must be 1 or 2");
    return moment_from_values(r, N, sweep::central_values(N, ctx), ctx);
}

M2Prediction m2_conjecture(long N, const PrecisionContext& ctx) {
    if (N < 1) throw std::invalid_argument("m2_conjecture: N must be positive");
    ScopedPrecision sp(ctx);
    const auto& c = specfun::constants(ctx);
    const Real pi = const_pi();
    const Real log7 = log(Real(7));

    // psi(1) = -gamma, psi(x + 2) = psi(x) + 1/x + 1/(x + 1)
    Real psi = -c.euler_gamma, total(0);
    for (long n = 1; n <= N; ++n) {
        if (n > 1) {
            const Real x(2 * n - 3);
            psi += Real(1) / x + Real(1) / (x + 1);
        }
        total += psi;
    }
    M2Prediction out;
    out.digamma_mean = total / Real(N);
    const Real lratio = c.Lprime1_chi7 / c.L1_chi7;
    const Real zratio = c.zeta_prime_at_2 / c.zeta_at_2;
    out.displayed = c.three_pi_over_sqrt7 *
                    (c.euler_gamma + 3 * lratio - 2 * zratio + log7 / 8 - log(2 * pi / 7) + out.digamma_mean);

    using specfun::gamma_rational;
    const Real gquot = gamma_rational(1, ctx) * gamma_rational(2, ctx) * gamma_rational(4, ctx) /
                       (gamma_rational(3, ctx) * gamma_rational(5, ctx) * gamma_rational(6, ctx));
    out.C = 4 * c.euler_gamma - 3 * log(gquot) - 2 * zratio + log7 / 8 + log(7 * pi * pi) + 3 * const_log2() - 1;
    out.reduced = c.three_pi_over_sqrt7 * (log(Real(N)) + out.C);
    out.difference = out.displayed - out.reduced;
    return out;
}

Real m2_conjecture_main(long N, const PrecisionContext& ctx) { return m2_conjecture(N, ctx).displayed; }

Real f0(const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    const auto& c = specfun::constants(ctx);
    const Real L = c.L1_chi7;
    return L * L * L / c.zeta_at_2 * Real(7) / 8;
}

Real f1(const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    const auto& c = specfun::constants(ctx);
    return f0(ctx) * (3 * c.Lprime1_chi7 / c.L1_chi7 - 2 * c.zeta_prime_at_2 / c.zeta_at_2 + log(Real(7)) / 8);
}

int delta_one(long m) {
    if (m < 1) throw std::invalid_argument("delta_one: m must be positive");
    const long r = std::lround(std::sqrt(static_cast<double>(m)));
    long root = -1;
    for (long c = std::max(0L, r - 1); c <= r + 1; ++c)
        if (c * c == m) root = c;
    if (root < 0) return 0;
    return field::legendre7(root);  // 0 when 7 | root
}

int delta_two(long l, long m) {
    if (l < 1 || m < 1) throw std::invalid_argument("delta_two: arguments must be positive");
    auto fl = field::factorize(l);
    auto fm = field::factorize(m);
    int out = 1;
    size_t i = 0, j = 0;
    while (i < fl.size() || j < fm.size()) {
        long p;
        long a = 0, b = 0;
        if (j == fm.size() || (i < fl.size() && fl[i].first < fm[j].first)) {
            p = fl[i].first;
            a = fl[i++].second;
        } else if (i == fl.size() || fm[j].first < fl[i].first) {
            p = fm[j].first;
            b = fm[j++].second;
        } else {
            p = fl[i].first;
            a = fl[i++].second;
            b = fm[j++].second;
        }
        out *= delta_prime_power(p, a, b);
        if (out == 0) return 0;
    }
    return out;
}

int delta_mu(long p, long m_exp, long l_exp) {
    if (!field::is_prime(p) || m_exp < 0 || l_exp < 0) throw std::invalid_argument("delta_mu: bad arguments");
    const auto cls = field::prime_class(p);
    if (cls == field::PrimeClass::ramified) return (m_exp == 0 && l_exp == 0) ? 1 : 0;
    if (l_exp >= 3) return 0;
    if (l_exp == 1) return (cls == field::PrimeClass::split && m_exp % 2 == 1) ? -2 : 0;
    if (m_exp % 2 == 1) return 0;
    if (cls == field::PrimeClass::split) return 1;
    return (m_exp / 2) % 2 == 0 ? 1 : -1;
}

Real empirical_delta_oracle(long m, long l, long N, const PrecisionContext& ctx) {
    if (m < 1 || l < 1 || N < 1) throw std::invalid_argument("empirical_delta_oracle: bad arguments");
    ScopedPrecision sp(ctx);
    field::CoeffSweep sw(1, 4, std::max(m, l));
    Real s(0);
    for (long n = 1; n <= N; ++n) {
        if (n > 1) sw.advance();
        s += sw.normalized(m) * sw.normalized(l);
    }
    return s / Real(N);
}

Real empirical_delta_mu_oracle(long p, long m_exp, long l_exp, long N, const PrecisionContext& ctx) {
    if (!field::is_prime(p) || m_exp < 0 || l_exp < 0 || N < 1)
        throw std::invalid_argument("empirical_delta_mu_oracle: bad arguments");
    long pm = 1;
    for (long i = 0; i < m_exp; ++i) pm *= p;
    ScopedPrecision sp(ctx);
    field::CoeffSweep sw(1, 4, std::max(pm, p));
    Real s(0);
    for (long n = 1; n <= N; ++n) {
        if (n > 1) sw.advance();
        s += sw.normalized(pm) * mu_coeff(p, l_exp, sw.normalized(p));
    }
    return s / Real(N);
}

Complex F_shift(const Complex& alpha, const Complex& beta, const PrecisionContext& ctx) {
    check_shift(alpha, "F_shift");
    check_shift(beta, "F_shift");
    ScopedPrecision sp(ctx);
    const Complex one(Real(1));
    const Complex ab = alpha + beta;
    auto L = [&](const Complex& s) { return specfun::dirichlet_L_chi7(s, 0, ctx); };
    const Complex num = L(one + alpha * Real(2)) * L(one + beta * Real(2)) * L(one + ab) *
                        (one - pow(Real(7), -(one + ab)));
    const Complex den = specfun::zeta(Complex(Real(2)) + ab * Real(2), 0, ctx) *
                        (one - pow(Real(7), -(Complex(Real(2)) + ab * Real(2))));
    return num / den;
}

double brute_tail_bound(long p, const Complex& alpha, const Complex& beta, int cutoff) {
    const double r = std::pow(static_cast<double>(p), -(0.5 - max_abs_re(alpha, beta)));
    return 2 * std::pow(r, cutoff + 1) / std::pow(1 - r, 3);
}

int cutoff_for(long p, const Complex& alpha, const Complex& beta, double tol, int min_cutoff) {
    int c = std::max(min_cutoff, 0);
    while (brute_tail_bound(p, alpha, beta, c) > tol) ++c;
    return c;
}

EulerFactorValue local_factor(long p, const Complex& alpha, const Complex& beta, FactorMode mode, int cutoff,
                              const PrecisionContext& ctx) {
    if (!field::is_prime(p)) throw std::invalid_argument("local_factor: p must be prime");
    check_shift(alpha, "local_factor");
    check_shift(beta, "local_factor");
    ScopedPrecision sp(ctx);
    EulerFactorValue out;
    out.p = p;
    out.cutoff = cutoff;
    const Real P(p);
    const Complex one(Real(1));
    if (mode != FactorMode::brute) {
        const Complex u = pow(P, -(one + alpha * Real(2)));
        const Complex v = pow(P, -(one + beta * Real(2)));
        const Complex x = pow(P, -(one + alpha + beta));
        switch (field::prime_class(p)) {
            case field::PrimeClass::split:
                out.closed = (one + x) / ((one - u) * (one - x) * (one - v));
                break;
            case field::PrimeClass::inert:
                out.closed = one / ((one + u) * (one + v));
                break;
            case field::PrimeClass::ramified:
                out.closed = one;
                break;
        }
    }
    if (mode != FactorMode::closed) {
        if (cutoff < 0) throw std::invalid_argument("local_factor: negative cutoff");
        const Complex wa = pow(P, -(Complex(Real(1) / 2) + alpha));
        const Complex wb = pow(P, -(Complex(Real(1) / 2) + beta));
        std::vector<Complex> A(static_cast<size_t>(cutoff) + 1), B(A.size());
        A[0] = one;
        B[0] = one;
        for (size_t i = 1; i < A.size(); ++i) {
            A[i] = A[i - 1] * wa;
            B[i] = B[i - 1] * wb;
        }
        Complex s(Real(0));
        for (long a = 0; a <= cutoff; ++a)
            for (long b = 0; b <= cutoff; ++b) {
                const int d = delta_prime_power(p, a, b);
                if (d != 0) s += A[static_cast<size_t>(a)] * B[static_cast<size_t>(b)] * Real(d);
            }
        out.brute = s;
        out.tail_bound = Real(brute_tail_bound(p, alpha, beta, cutoff));
    }
    return out;
}

ProductCheck product_consistency(const Complex& alpha, const Complex& beta, long P, const PrecisionContext& ctx) {
    check_shift(alpha, "product_consistency");
    check_shift(beta, "product_consistency");
    if (P < 7) throw std::invalid_argument("product_consistency: P must be at least 7");
    const cd a = to_cd(alpha), b = to_cd(beta);
    ProductCheck out;
    out.P = P;
    cd prod(1.0);
    for (long p : field::primes_up_to(P)) {
        const double lp = std::log(static_cast<double>(p));
        const int c = cutoff_for(p, alpha, beta, 1e-17, 2);
        out.truncation_bound += brute_tail_bound(p, alpha, beta, c);
        const cd wa = std::exp(-(0.5 + a) * lp), wb = std::exp(-(0.5 + b) * lp);
        std::vector<cd> A(static_cast<size_t>(c) + 1), B(A.size());
        A[0] = B[0] = 1.0;
        for (size_t i = 1; i < A.size(); ++i) {
            A[i] = A[i - 1] * wa;
            B[i] = B[i - 1] * wb;
        }
        cd brute(0.0);
        for (long i = 0; i <= c; ++i)
            for (long j = 0; j <= c; ++j) {
                const int d = delta_prime_power(p, i, j);
                if (d != 0) brute += static_cast<double>(d) * A[static_cast<size_t>(i)] * B[static_cast<size_t>(j)];
            }
        const double chi = specfun::chi7(p);
        const cd u = std::exp(-(1.0 + 2.0 * a) * lp), v = std::exp(-(1.0 + 2.0 * b) * lp);
        const cd x = std::exp(-(1.0 + a + b) * lp);
        const cd norm = brute * (1.0 - x) * (1.0 - chi * u) * (1.0 - chi * v) * (1.0 - chi * x) / (1.0 - x * x);
        if (p != 7) out.max_prime_deviation = std::max(out.max_prime_deviation, std::abs(norm - 1.0));
        prod *= norm;
    }
    ScopedPrecision sp(ctx);
    const Complex one(Real(1));
    const Complex ab = alpha + beta;
    auto L = [&](const Complex& s) { return specfun::dirichlet_L_chi7(s, 0, ctx); };
    const Complex outer = L(one + alpha * Real(2)) * L(one + beta * Real(2)) * L(one + ab) /
                          specfun::zeta(Complex(Real(2)) + ab * Real(2), 0, ctx);
    out.reassembled = outer * Complex(Real(prod.real()), Real(prod.imag()));
    out.F = F_shift(alpha, beta, ctx);
    out.difference = abs(out.reassembled - out.F).to_double();
    return out;
}

}  // namespace hecke::moments
