#include "doctest.h"

#include "hecke/field_arith.hpp"
#include "hecke/lcentral.hpp"
#include "hecke/specfun.hpp"
#include "hecke/vz.hpp"

#include <cmath>
#include <numbers>
#include <string>

using namespace hecke;
using namespace hecke::lcentral;

namespace {

// Independent sum for the central value: Q(n, x) = e^-x sum_{j<n} x^j/j!
// written out term by term in plain MPFR, coefficients from the exact table.
Real central_oracle(long n, long terms, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    const auto table = field::CoeffTable::build(2 * n - 1, terms, ctx);
    const Real h = 2 * const_pi() / 7;
    Real total(0);
    for (long m = 1; m <= terms; ++m) {
        const Real x = h * Real(m);
        Real t = exp(-x), q(0);
        for (long j = 0; j < n; ++j) {
            q += t;
            t = t * x / Real(j + 1);
        }
        total += table.normalized[static_cast<size_t>(m)] / sqrt(Real(m)) * q;
    }
    return 2 * total;
}

}  // namespace

TEST_CASE("series truncation plan") {
    for (long n : {1L, 5L, 33L, 201L}) {
        const auto p = plan_series(n, 40);
        CHECK(p.terms >= static_cast<long>(7.0 * n / (2 * std::numbers::pi)));
        CHECK(p.log_tail_bound < -40 * std::log(10.0));
        CHECK(log_tail_bound(n, p.terms - 1) >= p.log_tail_bound);
    }
    CHECK_THROWS_AS(plan_series(100000000L, 40), ComputeCapError);
}

TEST_CASE("central series agrees with the exact formula for odd n <= 33") {
    PrecisionContext ctx{30, 8};
    for (long n = 1; n <= 33; n += 2) {
        INFO("n = " << n);
        const auto s = central_value_series(n, ctx);
        const auto e = vz::central_value_exact(n, ctx);
        CHECK(s.method == Method::series);
        CHECK(s.tail_bound <= pow10_neg(30));
        CHECK(abs(s.value - e.L) <= Real(1e-25));
        CHECK(s.value >= -s.tail_bound);
    }
    CHECK(central_value_series(6, ctx).value.is_zero());
    CHECK(central_value_series(6, ctx).method == Method::exact);
}

TEST_CASE("central series against an independent term-by-term sum") {
    PrecisionContext ctx{25, 8};
    for (long n : {3L, 9L, 21L}) {
        const auto s = central_value_series(n, ctx);
        CHECK(abs(s.value - central_oracle(n, s.terms + 20, ctx)) <= Real(1e-22));
    }
    // reference column, truncated
    CHECK(abs(central_value_series(3, ctx).value - Real(std::string("4.7890"))) < Real(1e-4));
}

TEST_CASE("functional-equation factor") {
    PrecisionContext ctx{30, 8};
    ScopedPrecision sp(ctx);
    const Complex half(Real(1) / 2);
    const Complex x0 = gamma_factor_X(5, half, ctx);
    CHECK(abs(x0.re - Real(1)) < Real(1e-28));
    CHECK(abs(x0.im) < Real(1e-28));
    const Complex s5(Real(1) / 2, Real(5));
    CHECK(abs(abs(gamma_factor_X(9, s5, ctx)) - Real(1)) < Real(1e-28));
    const Complex p = gamma_factor_X(3, Complex(Real(1) / 2, Real(2)), ctx) *
                      gamma_factor_X(3, Complex(Real(1) / 2, Real(-2)), ctx);
    CHECK(abs(p.re - Real(1)) < Real(1e-28));
    CHECK(abs(p.im) < Real(1e-28));
    // off the line: X(s) X(1-s) = 1
    const Complex s(Real(0.3), Real(1.1));
    const Complex q = gamma_factor_X(7, s, ctx) * gamma_factor_X(7, Complex(Real(1)) - s, ctx);
    CHECK(abs(q.re - Real(1)) < Real(1e-27));
    CHECK_THROWS(gamma_factor_X(1, Complex(Real(-1) / 2), ctx));
}

TEST_CASE("root number of the family is +1") {
    PrecisionContext ctx{30, 8};
    for (long n : {1L, 2L, 5L}) {
        for (double y : {1.1, 1.7}) {
            INFO("n = " << n << " y = " << y);
            CHECK(theta_symmetry_residual(n, Real(y), ctx) < Real(1e-25));
        }
    }
}

TEST_CASE("critical line at t = 0 reproduces the central value") {
    PrecisionContext ctx{25, 8};
    for (long n : {1L, 2L, 4L}) {
        INFO("n = " << n);
        CriticalLine cl(n, 5.0, ctx);
        const long np = 2 * n - 1;
        const Real L = central_value_series(np, ctx).value;
        CHECK(abs(cl.hardy_Z(0) - L) < Real(1e-20));
        ScopedPrecision sp(ctx);
        const Real pref = sqrt(Real(7) / (2 * const_pi())) * tgamma(Real(np));
        const Complex lam = cl.completed_lambda(0);
        CHECK(abs(lam.re - pref * L) < Real(1e-20) * pref);
    }
}

TEST_CASE("critical line symmetries") {
    PrecisionContext ctx{25, 8};
    CriticalLine cl(2, 5.0, ctx);
    ScopedPrecision sp(ctx);
    const Complex a = cl.completed_lambda(1.3), b = cl.completed_lambda(-1.3);
    CHECK(abs(a.re - b.re) < Real(1e-20) * abs(a.re));
    CHECK(abs(a.im + b.im) <= Real(1e-20) * abs(a.re));
    for (double t : {0.5, 1.0, 2.0}) CHECK(abs(cl.completed_lambda(t).im) < Real(1e-20));
    CHECK(abs(cl.hardy_Z(0.7) - cl.hardy_Z(-0.7)) < Real(1e-20));
    // Z and Lambda differ by the modulus of the gamma factor
    const Complex lam = cl.completed_lambda(2.0);
    const Complex lg = specfun::lgamma(Complex(Real(3), Real(2)), ctx);
    const Real mod = sqrt(Real(7) / (2 * const_pi())) * exp(lg.re);
    CHECK(abs(lam.re / mod - cl.hardy_Z(2.0)) < Real(1e-20));
    CHECK_THROWS_AS(cl.hardy_Z(6.0), std::out_of_range);
}

TEST_CASE("Z changes sign where a scan says it should") {
    PrecisionContext ctx{20, 6};
    CriticalLine cl(1, 10.0, ctx);
    CHECK(cl.hardy_Z(0).sign() > 0);
    // fine independent scan at step 0.01 counts sign changes
    int changes = 0;
    int prev = cl.scaled_Z(0).sign();
    for (int i = 1; i <= 1000; ++i) {
        const int s = cl.scaled_Z(0.01 * i).sign();
        if (s != 0 && s != prev) ++changes;
        if (s != 0) prev = s;
    }
    const auto rec = cl.zeros(10.0);
    CHECK(static_cast<int>(rec.gammas.size()) == changes);
    CHECK(changes >= 1);
}

TEST_CASE("zero records") {
    PrecisionContext ctx{20, 6};
    const auto rec = zeros_up_to(50, 10.0, ctx);
    const double main = 10.0 / std::numbers::pi * std::log(100.0);
    CHECK(rec.main_term == doctest::Approx(main));
    CHECK(std::fabs(static_cast<double>(rec.gammas.size()) - main) <= 5);
    CHECK_FALSE(rec.warning);
    CHECK(rec.main_term_ok);
    CHECK(rec.max_abs_Z < 1e-8);
    REQUIRE(rec.scaled.size() == rec.gammas.size());
    for (size_t i = 0; i < rec.gammas.size(); ++i) {
        CHECK(rec.scaled[i] == doctest::Approx(rec.gammas[i] * std::log(100.0) / std::numbers::pi));
        if (i) CHECK(rec.gammas[i] > rec.gammas[i - 1]);
        CHECK(rec.gammas[i] > 0);
    }
    for (long n : {10L, 100L}) {
        for (double T : {5.0, 10.0}) {
            const auto r = zeros_up_to(n, T, ctx);
            INFO("n = " << n << " T = " << T);
            CHECK(std::fabs(static_cast<double>(r.gammas.size()) - r.main_term) <= 5 + std::log(2.0 * n));
        }
    }
}

TEST_CASE("theta integral off the line matches the Dirichlet series") {
    // at s = 3 the series sum a_m m^-s converges absolutely; direct sum to 4*10^4
    PrecisionContext ctx{20, 6};
    for (long n : {1L, 2L}) {
        CriticalLine cl(n, 1.0, ctx);
        ScopedPrecision sp(ctx);
        const long k = 4 * n - 3;
        const long M = 40000;
        const auto table = field::CoeffTable::build(k, M, ctx);
        Real L(0);
        for (long m = 1; m <= M; ++m) L += table.normalized[static_cast<size_t>(m)] / pow(Real(m), 3);
        const Real a = Real(k) / 2;
        const Real direct = pow(Real(7) / (2 * const_pi()), 3) * tgamma(Real(3) + a) * L;
        const Complex lam = cl.completed_lambda_at(Complex(Real(3)));
        INFO("n = " << n << " direct " << direct.to_string(15) << " integral " << lam.re.to_string(15));
        CHECK(abs(lam.re - direct) < Real(1e-7) * abs(direct));
        CHECK(abs(lam.im) < Real(1e-15));
    }
}
