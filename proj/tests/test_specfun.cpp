#include "doctest.h"

#include "hecke/quadrature.hpp"
#include "hecke/specfun.hpp"

#include <cmath>

using namespace hecke;
using namespace hecke::specfun;

namespace {

// Q(n, x) = int_x^inf t^(n-1) e^-t dt / Gamma(n) by panel Gauss-Legendre.
Real quad_Q(long n, const Real& x, int panels_scale = 1) {
    const double sn = std::sqrt(static_cast<double>(n));
    const Real end = max(x, Real(n)) + Real(15.0 * sn + 100.0);
    const double width = std::min(2.0, sn / 2.0);
    const int panels = panels_scale * static_cast<int>(std::ceil((end - x).to_double() / width));
    const Real lg = lgamma(Real(n));
    return quad::integrate([&](const Real& t) { return exp(Real(n - 1) * log(t) - t - lg); }, x, end, panels);
}

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k.
template <class F>
Real alternating_sum(F a, int n) {
    Real d = pow(Real(3) + sqrt(Real(8)), static_cast<long>(n));
    d = (d + Real(1) / d) / 2;
    Real b(-1);
    Real c = -d;
    Real s(0);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = b * Real(static_cast<long>(k + n)) * Real(static_cast<long>(k - n)) /
            (Real(k + 0.5) * Real(k + 1));
    }
    return s / d;
}

}  // namespace

TEST_CASE("regularised incomplete gamma: closed forms") {
    PrecisionContext ctx{40, 8};
    ScopedPrecision sp(ctx);
    CHECK(abs(reg_gamma_Q(1, Real(1), ctx) - exp(Real(-1))) < pow10_neg(40));
    for (long n : {1L, 2L, 17L, 500L}) CHECK(reg_gamma_Q(n, Real(0), ctx) == Real(1));
    // Q(3, x) = e^-x (1 + x + x^2/2)
    const Real x(7.25);
    CHECK(abs(reg_gamma_Q(3, x, ctx) - exp(-x) * (1 + x + x * x / 2)) < pow10_neg(40));
    CHECK(abs(reg_gamma_Q(5, Real(20), ctx) - quad_Q(5, Real(20))) < pow10_neg(38));
}

TEST_CASE("regularised incomplete gamma against quadrature on the grid") {
    PrecisionContext ctx{30, 8};
    ScopedPrecision sp(PrecisionContext{45, 8});
    for (long n : {1L, 10L, 100L, 1000L}) {
        for (const Real& x : {Real(0.1), Real(n) / 2, Real(n), Real(2 * n)}) {
            const Real q = reg_gamma_Q(n, x, ctx);
            const Real oracle = quad_Q(n, x);
            CHECK(abs(oracle - quad_Q(n, x, 2)) < pow10_neg(35));
            INFO("n=" << n << " x=" << x.to_string(6));
            CHECK(abs(q - oracle) <= pow10_neg(ctx.digits - 3));
        }
    }
}

TEST_CASE("regularised incomplete gamma: monotonicity and range") {
    PrecisionContext ctx{20, 5};
    for (long n : {1L, 3L, 40L, 937L}) {
        Real prev(2);
        for (double x = 0; x < 3.0 * n + 30; x += 0.37 * n + 1.1) {
            const Real q = reg_gamma_Q(n, Real(x), ctx);
            CHECK(q >= Real(0));
            CHECK(q <= Real(1));
            CHECK(q <= prev);
            CHECK(reg_gamma_Q(n + 1, Real(x), ctx) >= q);
            prev = q;
        }
    }
    // deep tail in log space survives without underflow
    const Real tiny = reg_gamma_Q(1873, Real(2000), PrecisionContext{30, 5});
    CHECK(tiny.sign() > 0);
    CHECK(tiny < Real(1e-2));
    CHECK_THROWS_AS(reg_gamma_Q(0, Real(1), ctx), std::invalid_argument);
}

TEST_CASE("erfc") {
    PrecisionContext ctx{30, 5};
    ScopedPrecision sp(ctx);
    CHECK(erfc(Real(0), ctx) == Real(1));
    const Real two_over_sqrtpi = 2 / sqrt(const_pi());
    const Real oracle =
        two_over_sqrtpi * quad::integrate([](const Real& t) { return exp(-(t * t)); }, Real(1), Real(12), 40);
    CHECK(abs(erfc(Real(1), ctx) - oracle) < pow10_neg(28));
    CHECK(erfc(Real(1), ctx).to_string(6) == "1.57299e-01");
    for (double y : {0.3, 1.0, 2.5})
        CHECK(abs(erfc(Real(-y), ctx) - (Real(2) - erfc(Real(y), ctx))) < pow10_neg(29));
    const Real y(10);
    const Real asym = exp(-(y * y)) / (sqrt(const_pi()) * y) * (Real(1) - Real(1) / (2 * y * y));
    CHECK(abs(erfc(y, ctx) / asym - 1) < Real(1e-2));
}

TEST_CASE("Tricomi asymptotic at n = 10^4") {
    PrecisionContext ctx{25, 5};
    ScopedPrecision sp(ctx);
    const long n = 10000;
    for (int y = -2; y <= 2; ++y) {
        const Real lhs = tricomi_lhs(n, Real(y), ctx);
        const Real rhs = tricomi_rhs(n, Real(y), ctx);
        CHECK(abs(lhs - rhs) <= Real(10.0 / n));
    }
    const Real y0 = Real(0.5) - sqrt(Real(2)) / (3 * sqrt(const_pi() * Real(n)));
    CHECK(abs(tricomi_lhs(n, Real(0), ctx) - y0) <= Real(10.0 / n));
    CHECK(abs(tricomi_lhs(n, Real(2), ctx) - tricomi_rhs(n, Real(2), ctx)) <= Real(1e-3));
}

TEST_CASE("gamma at sevenths") {
    PrecisionContext ctx{40, 5};
    ScopedPrecision sp(ctx);
    const Real pi = const_pi();
    const Real omega = gamma_rational(1, ctx) * gamma_rational(2, ctx) * gamma_rational(4, ctx) / (4 * pi * pi);
    CHECK(abs(omega - Real(std::string("0.81408739831"))) < Real(1e-11));
    CHECK(abs(gamma_rational(1, ctx) * gamma_rational(6, ctx) - pi / sin(pi / 7)) < pow10_neg(38));
    CHECK(abs(gamma_rational(3, ctx) * gamma_rational(4, ctx) - pi / sin(3 * pi / 7)) < pow10_neg(38));
    CHECK(abs(gamma_rational(2, ctx) * gamma_rational(5, ctx) - pi / sin(2 * pi / 7)) < pow10_neg(38));
    CHECK_THROWS(gamma_rational(7, ctx));
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli(2) == mpq_class(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
    CHECK(bernoulli(20) == mpq_class(-174611, 330));
}

TEST_CASE("digamma") {
    PrecisionContext ctx{40, 8};
    ScopedPrecision sp(ctx);
    const Real g = const_euler();
    CHECK(abs(digamma(Real(1), ctx) + g) < pow10_neg(40));
    CHECK(abs(digamma(Real(2), ctx) - (1 - g)) < pow10_neg(40));
    CHECK(abs(digamma(Real(1001), ctx) - log(Real(1000.5))) < Real(1e-6));
    // psi(1/2) = -gamma - 2 log 2
    CHECK(abs(digamma(Real(0.5), ctx) + g + 2 * const_log2()) < pow10_neg(40));
    for (double x : {0.25, 2.75, 41.0, 937.5})
        CHECK(abs(digamma(Real(x + 1), ctx) - digamma(Real(x), ctx) - 1 / Real(x)) < pow10_neg(38));

    const Complex z(Real(1.5), Real(4));
    const Complex step = digamma(Complex(Real(2.5), Real(4)), ctx) - digamma(z, ctx) - Complex(Real(1)) / z;
    CHECK(abs(step) < pow10_neg(38));
    // real axis agrees with the real routine
    CHECK(abs(digamma(Complex(Real(3.25), Real(0)), ctx).re - digamma(Real(3.25), ctx)) < pow10_neg(38));
    // Im psi(1/2 + it) = (pi/2) tanh(pi t)
    const Real t(0.8);
    CHECK(abs(digamma(Complex(Real(0.5), t), ctx).im - const_pi() / 2 * ((exp(2 * const_pi() * t) - 1) / (exp(2 * const_pi() * t) + 1))) < pow10_neg(38));
}

TEST_CASE("complex log gamma") {
    PrecisionContext ctx{40, 8};
    ScopedPrecision sp(ctx);
    for (double x : {0.5, 1.0, 7.25, 60.0})
        CHECK(abs(lgamma(Complex(Real(x), Real(0)), ctx).re - hecke::lgamma(Real(x))) < pow10_neg(38));
    const Complex z(Real(2.5), Real(13));
    const Complex d = lgamma(z + Complex(Real(1)), ctx) - lgamma(z, ctx) - log(z);
    CHECK(abs(d) < pow10_neg(38));
    // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    const Real t(3);
    const Real lhs = 2 * lgamma(Complex(Real(0.5), t), ctx).re;
    const Real rhs = log(const_pi()) - log((exp(const_pi() * t) + exp(-const_pi() * t)) / 2);
    CHECK(abs(lhs - rhs) < pow10_neg(37));
}

TEST_CASE("Hurwitz and Riemann zeta") {
    PrecisionContext ctx{35, 8};
    ScopedPrecision sp(ctx);
    const Real pi = const_pi();
    CHECK(abs(hurwitz_zeta(Real(2), Real(1), 0, ctx) - pi * pi / 6) < pow10_neg(35));
    CHECK(abs(hurwitz_zeta(Real(4), Real(1), 0, ctx) - pow(pi, 4L) / 90) < pow10_neg(35));
    CHECK(abs(hurwitz_zeta(Real(0), Real(1), 0, ctx) + Real(0.5)) < pow10_neg(35));
    CHECK(abs(hurwitz_zeta(Real(3), Real(0.5), 0, ctx) - 7 * hurwitz_zeta(Real(3), Real(1), 0, ctx)) < pow10_neg(33));
    // zeta(s, q) - zeta(s, q + 1) = q^-s at complex s
    const Complex s(Real(0.7), Real(3.1));
    const Real q(0.3);
    const Complex diff = hurwitz_zeta(s, q, 0, ctx) - hurwitz_zeta(s, q + 1, 0, ctx) - exp(-(s * log(q)));
    CHECK(abs(diff) < pow10_neg(33));
    // first nontrivial zero
    const Complex rho(Real(0.5), Real(std::string("14.134725141734693790457251983562")));
    CHECK(abs(zeta(rho, 0, ctx)) < pow10_neg(28));
    // derivative against a central difference
    const Real h(1e-12);
    const Complex fd = (hurwitz_zeta(s + Complex(h), q, 0, ctx) - hurwitz_zeta(s - Complex(h), q, 0, ctx)) / (2 * h);
    CHECK(abs(fd - hurwitz_zeta(s, q, 1, ctx)) < Real(1e-18));
    CHECK_THROWS(hurwitz_zeta(Real(1), Real(1), 0, ctx));
}

TEST_CASE("zeta'(2) by two independent series") {
    PrecisionContext ctx{40, 8};
    ScopedPrecision sp(PrecisionContext{50, 8});
    const Real em = hurwitz_zeta(Real(2), Real(1), 1, ctx);
    // eta(2) and eta'(2) by accelerated alternating sums
    const Real eta = alternating_sum([](int k) { return Real(1) / (Real(k + 1) * Real(k + 1)); }, 80);
    const Real deta = alternating_sum([](int k) { return -log(Real(k + 1)) / (Real(k + 1) * Real(k + 1)); }, 80);
    const Real alt = 2 * deta - 2 * eta * const_log2();
    CHECK(abs(em - alt) < pow10_neg(40));
    CHECK(em.to_string(7) == "-9.375483e-01");
}

TEST_CASE("L(s, chi_-7)") {
    PrecisionContext ctx{35, 8};
    ScopedPrecision sp(ctx);
    const Real pi = const_pi();
    CHECK(chi7(1) == 1);
    CHECK(chi7(3) == -1);
    CHECK(chi7(7) == 0);
    CHECK(abs(dirichlet_L_chi7(Real(1), 0, ctx) - pi / sqrt(Real(7))) < pow10_neg(35));
    CHECK(dirichlet_L_chi7(Real(1), 0, ctx).to_string(6) == "1.18741e+00");

    // direct partial sum with 10^6 terms; the tail is O(10^-12)
    double direct = 0;
    for (long n = 1000000; n >= 1; --n) direct += chi7(n) / (static_cast<double>(n) * n);
    CHECK(std::abs(dirichlet_L_chi7(Real(2), 0, ctx).to_double() - direct) < 1e-8);

    // Lambda(s) = (7/pi)^((s+1)/2) Gamma((s+1)/2) L(s) is symmetric
    auto completed = [&](const Real& s) {
        const Real a = (s + 1) / 2;
        return pow(Real(7) / pi, a) * tgamma(a) * dirichlet_L_chi7(s, 0, ctx);
    };
    for (const char* s0 : {"0.3", "0.1", "0.45"}) {
        const Real s1(std::string{s0});
        CHECK(abs(completed(s1) - completed(1 - s1)) < pow10_neg(ctx.digits - 5));
    }

    // derivative against a central difference, at and away from s = 1
    for (double s0 : {1.0, 0.5, 1.7}) {
        const Real h(1e-10);
        const Real fd = (dirichlet_L_chi7(Real(s0) + h, 0, ctx) - dirichlet_L_chi7(Real(s0) - h, 0, ctx)) / (2 * h);
        CHECK(abs(fd - dirichlet_L_chi7(Real(s0), 1, ctx)) < Real(1e-15));
    }
    // complex argument: L(1 + 2it) against direct Hurwitz assembly
    const Complex s(Real(1), Real(0.6));
    Complex viaH;
    for (int r = 1; r <= 6; ++r) viaH += hurwitz_zeta(s, Real(r) / 7, 0, ctx) * Real(chi7(r));
    viaH = viaH * exp(-(s * log(Real(7))));
    CHECK(abs(viaH - dirichlet_L_chi7(s, 0, ctx)) < pow10_neg(32));
}

TEST_CASE("Lerch-type closed form for L'/L(1, chi_-7)") {
    // L'/L(1) = gamma + log(2 pi) - log(G(1)G(2)G(4) / (G(3)G(5)G(6))), G(j) = Gamma(j/7)
    PrecisionContext ctx{35, 8};
    ScopedPrecision sp(ctx);
    const Real ratio = gamma_rational(1, ctx) * gamma_rational(2, ctx) * gamma_rational(4, ctx) /
                       (gamma_rational(3, ctx) * gamma_rational(5, ctx) * gamma_rational(6, ctx));
    const Real closed = const_euler() + log(2 * const_pi()) - log(ratio);
    const Real lhs = dirichlet_L_chi7(Real(1), 1, ctx) / dirichlet_L_chi7(Real(1), 0, ctx);
    CHECK(abs(lhs - closed) < pow10_neg(33));
}

TEST_CASE("named constants") {
    PrecisionContext ctx{30, 8};
    const auto& c = constants(ctx);
    ScopedPrecision sp(ctx);
    CHECK(abs(c.omega - Real(std::string("0.81408739831"))) < Real(1e-11));
    CHECK(c.two_pi_over_sqrt7.to_string(10) == "2.374820823e+00");
    CHECK(c.zeta_prime_at_2.to_string(6) == "-9.37548e-01");
    CHECK(abs(c.euler_gamma - Real(std::string("0.57721566490153286060651209008240243"))) < pow10_neg(30));
    CHECK(&constants(ctx) == &c);
    CHECK((c.three_pi_over_sqrt7 / 4).to_string(9) == "8.90557809e-01");
}
