#pragma once

#include "hecke/real.hpp"

#include <gmpxx.h>

namespace hecke::specfun {

/// Working digits for exponents of size k: max(base, 40 + 0.02 k).
int digits_for_exponent(long k, int base);

/// log(x^j e^-x / j!) for j >= 0, x > 0.
Real log_poisson_term(long j, const Real& x);

/// Regularised upper incomplete gamma Q(n, x) = Gamma(n, x) / Gamma(n).
Real reg_gamma_Q(long n, const Real& x, const PrecisionContext& ctx);

Real erfc(const Real& y, const PrecisionContext& ctx);

/// gamma(n+1, n - y sqrt(2n)) / Gamma(n+1).
Real tricomi_lhs(long n, const Real& y, const PrecisionContext& ctx);
/// erfc(y)/2 - sqrt(2)/(3 sqrt(pi n)) (1 + y^2) e^(-y^2).
Real tricomi_rhs(long n, const Real& y, const PrecisionContext& ctx);

/// Gamma(j/7), 1 <= j <= 6.
Real gamma_rational(int j, const PrecisionContext& ctx);

/// Bernoulli number B_n (B_1 = -1/2), exact.
mpq_class bernoulli(int n);

Real digamma(const Real& x, const PrecisionContext& ctx);
Complex digamma(const Complex& z, const PrecisionContext& ctx);
/// Principal log-gamma for Re z > 0.
Complex lgamma(const Complex& z, const PrecisionContext& ctx);

/// Hurwitz zeta zeta(s, q) (order 0) or its s-derivative (order 1); s != 1, q > 0.
Complex hurwitz_zeta(const Complex& s, const Real& q, int order, const PrecisionContext& ctx);
Real hurwitz_zeta(const Real& s, const Real& q, int order, const PrecisionContext& ctx);

/// Riemann zeta and its derivative at s != 1.
Complex zeta(const Complex& s, int order, const PrecisionContext& ctx);

/// Kronecker symbol (-7 / n), equal to (n / 7).
int chi7(long n);

/// L(s, chi_-7) or its derivative; entire, so s = 1 is allowed.
Complex dirichlet_L_chi7(const Complex& s, int order, const PrecisionContext& ctx);
Real dirichlet_L_chi7(const Real& s, int order, const PrecisionContext& ctx);

struct Constants {
    Real euler_gamma;
    Real zeta_prime_at_2;
    Real zeta_at_2;
    Real omega;                // Gamma(1/7)Gamma(2/7)Gamma(4/7) / (4 pi^2)
    Real two_pi_over_sqrt7;
    Real three_pi_over_sqrt7;
    Real L1_chi7;              // L(1, chi_-7) = pi / sqrt 7
    Real Lprime1_chi7;         // L'(1, chi_-7)
};

/// All named constants at ctx precision. Cached per precision; thread safe.
const Constants& constants(const PrecisionContext& ctx);

}  // namespace hecke::specfun
