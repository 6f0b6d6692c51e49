#pragma once

// One-level density of low zeros in the family chi^(4n-3): empirical sums over
// zeros, the explicit formula, the random-matrix prediction and the
// ratios-conjecture density.

#include "hecke/real.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace hecke::density {

using cplx = std::complex<double>;

/// Even test function with f-hat(x) = integral f(u) e^(-2 pi i u x) du.
struct TestFunction {
    enum class Kind { fejer, gaussian, custom };
    Kind kind = Kind::fejer;
    double param = 1;  // fejer: support alpha of f-hat; gaussian: width w

    // custom only
    std::function<double(double)> f_custom;
    std::function<double(double)> fhat_custom;
    double custom_support = 0;  // f-hat vanishes beyond this; 0 if unknown
    double custom_extent = 200;  // f negligible beyond this

    /// f(y) = (sin(pi a y)/(pi a y))^2, f-hat(x) = max(0, 1 - |x|/a)/a.
    static TestFunction fejer(double alpha = 1);
    /// f(y) = exp(-pi y^2 / w^2), f-hat(x) = w exp(-pi w^2 x^2).
    static TestFunction gaussian(double w = 1);
    static TestFunction custom(std::function<double(double)> f, std::function<double(double)> fhat,
                               double support, double extent);

    double f(double y) const;
    double fhat(double x) const;
    /// Beyond this |x|, |f-hat| < tol (exact support for fejer).
    double fhat_cutoff(double tol) const;
    bool compact_support() const { return kind == Kind::fejer || (kind == Kind::custom && custom_support > 0); }
    std::string describe() const;
};

/// phi(t) = f(t L / pi): the zeros gamma are scaled by L / pi (L = log N).
struct ScaledTest {
    TestFunction f;
    double L = 1;

    double phi(double t) const { return f.f(t * L / 3.141592653589793238); }
    double phihat(double x) const;
};

/// Lambda(p^r) = log p (alpha_n(p)^r + conj(alpha_n(p))^r) for chi^(4n-3); 0 at p = 7.
Real lambda_vm(long n, long p, long r, const PrecisionContext& ctx);

/// a_n(p) for the family, in double, from sum over half-representatives of
/// eps(a, b) cos(2 pi k theta(a, b)).
struct PrimeTable {
    std::vector<long> primes;
    std::vector<int> cls;  // 0 split, 1 inert, 2 ramified
    std::vector<std::vector<std::pair<int, double>>> reps;  // (eps, theta) per half-representative

    static PrimeTable build(long max_p, const PrecisionContext& ctx);
    double a(long n, size_t i) const;  // family index n, prime index i
};

struct ExplicitFormula {
    long n = 0;
    double archimedean = 0;  // (1/2pi) integral phi(t) (2 log(7/2pi) + psi(n'+it) + psi(n'-it)) dt
    double primes_r1 = 0;    // -(1/pi) sum Lambda(k)/sqrt k phihat(log k / 2pi) over k = p
    double primes_r2 = 0;    // k = p^2
    double primes_r3 = 0;    // k = p^r, r >= 3
    double total = 0;        // the zero sum: sum over all gamma of phi(gamma)
    double k_max = 0;        // prime powers up to here
};

/// Both sides' right-hand side for one member. Prime powers up to
/// exp(2 L s) with s the f-hat cutoff at 1e-14 (the exact support for fejer).
ExplicitFormula explicit_formula_sum(long n, const ScaledTest& phi, const PrecisionContext& ctx);

/// The same for n = 1..N sharing the prime table and the digamma nodes.
std::vector<ExplicitFormula> explicit_formula_family(long N, const ScaledTest& phi, const PrecisionContext& ctx);

/// (1/2pi) integral over |t| > t0 of phi(t) (2 log(7/2pi) + 2 Re psi(2n-1+it)) dt for
/// n = 1..N: the smooth count of zeros weighted by phi. t0 = 0 gives the
/// archimedean term.
std::vector<double> archimedean_family(long N, const ScaledTest& phi, double t0, const PrecisionContext& ctx);

/// Sum over all zeros (both signs) of phi(gamma) for one zero list of positive ordinates.
double zero_sum(const std::vector<double>& gammas, const ScaledTest& phi);

struct RmtValue {
    double fhat_form = 0;   // f-hat(0) + (1/2) integral_{-1}^{1} f-hat
    double direct_form = 0; // integral f(y)(1 + sin(2 pi y)/(2 pi y)) dy; NaN if not computed
};

/// Orthogonal (even) one-level density against f.
RmtValue rmt_prediction(const TestFunction& f, const PrecisionContext& ctx);

struct DensityReport {
    long N = 0;
    double T = 0;
    std::string testfn;
    double empirical_raw = 0;     // zeros up to height T
    double tail_correction = 0;   // smooth count of the zeros above T
    double empirical = 0;         // raw + tail
    double explicit_formula = 0;  // family average of the explicit formula
    double primes_split = 0;      // family average of the k = p part
    double primes_squares = 0;    // k = p^2
    double primes_higher = 0;     // k = p^r, r >= 3
    double rmt = 0;
    double v = 0;                 // limiting density value used for the bound (the rmt value)
    double nonvanishing_lower_bound = 0;  // (2 - v)/2 clipped to [0, 1]
    double empirical_bound = 0;           // (2 - empirical)/2 clipped
    int warnings = 0;             // members whose zero scan flagged missed zeros
};

/// (1/N) sum_n sum_gamma f(gamma log N / pi), zeros up to T plus the smooth
/// tail above T, with the explicit-formula and random-matrix counterparts.
DensityReport empirical_one_level(long N, const TestFunction& f, double T, const PrecisionContext& ctx);

/// The same statistic from precomputed zero records (record i is n = i + 1).
DensityReport one_level_from_zeros(long N, const TestFunction& f, double T, const std::vector<std::vector<double>>& gammas,
                                   int warnings, const PrecisionContext& ctx);

// ratios-conjecture density

/// Local factor of A(alpha, gamma) at p; x = p^(-1-alpha-gamma), y = p^(-1-2 gamma):
/// split (1-y)(1-2x+y)/(1-x)^2, inert (1-y^2)/(1-x^2), p = 7 (1-y)/(1-x).
cplx ratios_local_factor(long p, cplx alpha, cplx gamma);

struct RatiosA {
    cplx value;
    long P = 0;
    double tail_bound = 0;  // relative: 1.5 sum_{m > P} (|x| + |y|)^2 bound, O(1/P)
};

/// A(alpha, gamma) truncated at p <= P (double precision).
RatiosA ratios_A(cplx alpha, cplx gamma, long P = 100000);

/// A'(r, r) = d/d alpha A(alpha, gamma) at alpha = gamma = r by central
/// differences, step 1e-6, one Richardson step.
cplx ratios_A_prime(cplx r, long P = 100000);

/// Closed form of A'(r, r): -sum_inert 2 log p x^2/(1-x^2) - log 7 x/(1-x), x = p^(-1-2r).
cplx ratios_A_prime_closed(cplx r, long P = 100000);

/// Re of the bracketed ratios density integrand at height t for member n,
/// divided by 2 pi. For |t| < 1e-3 the removable singularity at 0 is
/// bridged by Richardson extrapolation in t^2 from t = 1e-3, 2e-3.
double ratios_one_level_integrand(long n, double t, const PrecisionContext& ctx);

/// (1/N) sum_n integral phi(t) * integrand dt for phi = f(t log N / pi).
double ratios_one_level(long N, const TestFunction& f, const PrecisionContext& ctx);

}  // namespace hecke::density
