#pragma once

// Moments of the central values over the family chi^(4n-3), the
// recipe predictions for them, and the averages delta that feed the recipe.

#include "hecke/real.hpp"
#include "hecke/sweep.hpp"

#include <vector>

namespace hecke::moments {

struct MomentReport {
    int r = 1;
    long N = 0;
    Real empirical;
    Real predicted_main;           // 2 pi/sqrt 7, or the digamma form for r = 2
    Real predicted_constant_form;  // 2 pi/sqrt 7, or (3 pi/sqrt 7)(log N + C)
    Real residual;                 // empirical - predicted_main
    Real bound;                    // r = 1: 3 log N / sqrt N; r = 2: 0
};

/// (1/N) sum_{n<=N} L(1/2, chi^(4n-3))^r from the parallel sweep.
MomentReport empirical_moment(int r, long N, const PrecisionContext& ctx);
/// Same, from precomputed family values (the first N are used).
MomentReport moment_from_values(int r, long N, const std::vector<sweep::FamilyCentral>& values,
                                const PrecisionContext& ctx);

struct M2Prediction {
    Real displayed;     // with (1/N) sum psi(2n-1)
    Real reduced;       // (3 pi/sqrt 7)(log N + C)
    Real C;
    Real digamma_mean;  // (1/N) sum_{n<=N} psi(2n-1)
    Real difference;    // displayed - reduced
};

M2Prediction m2_conjecture(long N, const PrecisionContext& ctx);
/// The displayed form alone.
Real m2_conjecture_main(long N, const PrecisionContext& ctx);

/// f0 = F(0,0) = 3 pi / (4 sqrt 7) from its defining product.
Real f0(const PrecisionContext& ctx);
/// f1 = f0 (3 L'/L(1, chi_-7) - 2 zeta'/zeta(2) + log 7 / 8).
Real f1(const PrecisionContext& ctx);

/// <a_n(m)>: 0 off squares, (sqrt m / 7) on squares.
int delta_one(long m);
/// <a_n(l) a_n(m)>, assembled from prime-power factors.
int delta_two(long l, long m);
/// <a_n(p^m) mu_n(p^l)> with mu_n the Moebius coefficients of 1/L.
int delta_mu(long p, long m_exp, long l_exp);

/// (1/N) sum_{n<=N} a_n(m) a_n(l); l = 1 gives the average of a_n(m).
Real empirical_delta_oracle(long m, long l, long N, const PrecisionContext& ctx);
/// (1/N) sum_{n<=N} a_n(p^m) mu_n(p^l).
Real empirical_delta_mu_oracle(long p, long m_exp, long l_exp, long N, const PrecisionContext& ctx);

/// F(a, b) = L(1+2a) L(1+2b) L(1+a+b) (1 - 7^(-1-a-b)) / (zeta(2+2a+2b)(1 - 7^(-2-2a-2b))),
/// L = L(., chi_-7). Shifts must satisfy |Re| < 1/4 - 10^-3.
Complex F_shift(const Complex& alpha, const Complex& beta, const PrecisionContext& ctx);

struct EulerFactorValue {
    long p = 0;
    Complex closed;
    Complex brute;
    int cutoff = 0;
    Real tail_bound;  // bound on what the brute sum leaves out beyond cutoff
};

enum class FactorMode { closed, brute, both };

/// Local factor sum_{a,b} delta(p^a, p^b) p^(-(1/2+alpha)a - (1/2+beta)b).
/// brute truncates both exponents at `cutoff`.
EulerFactorValue local_factor(long p, const Complex& alpha, const Complex& beta, FactorMode mode, int cutoff,
                              const PrecisionContext& ctx);

/// Smallest cutoff >= min_cutoff whose brute-force tail bound is below tol.
int cutoff_for(long p, const Complex& alpha, const Complex& beta, double tol, int min_cutoff);
/// 2 r^(c+1) / (1-r)^3 with r = p^(-1/2 + max|Re shift|): bounds the terms of
/// the double sum with an exponent above c, since |delta(p^a, p^b)| <= min(a,b) + 1.
double brute_tail_bound(long p, const Complex& alpha, const Complex& beta, int cutoff);

/// The local factors multiply to zeta(1+a+b) F(a, b). Prime by prime, the
/// brute-force factor times (1 - x) and the inverse Euler factors of
/// L(1+2a) L(1+2b) L(1+a+b) / zeta(2+2a+2b) is 1 for p != 7 and
/// 1/(1 + 7^(-1-a-b)) at p = 7. Reassembling over p <= P and multiplying the
/// L and zeta values back must give F.
struct ProductCheck {
    long P = 0;
    Complex reassembled;
    Complex F;
    double difference = 0;
    double truncation_bound = 0;  // summed brute-force tails over p <= P
    double max_prime_deviation = 0;  // largest |normalised factor - 1| for p != 7
};

ProductCheck product_consistency(const Complex& alpha, const Complex& beta, long P, const PrecisionContext& ctx);

}  // namespace hecke::moments
