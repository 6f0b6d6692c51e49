#pragma once

// Central values from the incomplete-gamma series and the critical-line
// evaluator for the even family chi^(4n-3).

#include "hecke/real.hpp"

#include <string>
#include <vector>

namespace hecke::lcentral {

enum class Method { series, exact };

const char* method_name(Method m);

/// L(1/2, chi^(2n-1)).
struct CentralValue {
    long n = 0;
    Real value;
    Method method = Method::series;
    Real tail_bound;
    long terms = 0;  // coefficients summed
};

/// Truncation point of the central series and the log of its tail bound.
struct SeriesPlan {
    long terms = 0;
    double log_tail_bound = 0;  // natural log
};

/// Largest M * k accepted by the series routes before ComputeCapError.
inline constexpr double kComputeCap = 5e8;

/// Smallest M beyond the transition 7n/(2 pi) whose tail bound is below
/// 10^-digits. The bound uses |chi(m)| <= d(m) m^(k/2) <= 2 m^((k+1)/2) and
/// Q(n, x) <= x^(n-1) e^-x / (n-1)! * x / (x - n + 1), summed geometrically.
SeriesPlan plan_series(long n, int digits);

/// Natural log of the tail bound of the series after `terms` coefficients.
double log_tail_bound(long n, long terms);

/// 2 sum_m chi^(2n-1)(m) m^(-n) Q(n, 2 pi m / 7). Even n is exactly 0.
CentralValue central_value_series(long n, const PrecisionContext& ctx);

/// X(s) = (7/2pi)^(1-2s) Gamma(1 - s + k/2) / Gamma(s + k/2) for odd k.
Complex gamma_factor_X(long k, const Complex& s, const PrecisionContext& ctx);

/// Root number check for the family: the theta function f(y) = sum m^a a_m
/// e^(-m y / Q) against y^(-2a-1) f(1/y). Returns the relative difference.
Real theta_symmetry_residual(long n, const Real& y, const PrecisionContext& ctx);

struct ZeroRecord {
    long n = 0;
    std::vector<double> gammas;
    std::vector<double> scaled;  // gamma log(2n) / pi
    double t_max = 0;
    double main_term = 0;        // (T/pi) log(2n)
    double expected_count = 0;   // theta(T)/pi, with theta the gamma-factor phase
    double max_abs_Z = 0;        // largest |Z| at a reported zero
    bool main_term_ok = true;    // count within 5 + log(2n) of main_term
    bool warning = false;        // count far from expected_count: zeros likely missed
    std::string message;
};

/// Lambda(1/2 + it) = (7/2pi)^s Gamma(s + 2n - 3/2) L(s, chi^(4n-3)) and the
/// Hardy function for one member of the family, via the theta integral on
/// [1, Y]. The node set depends on t_max; evaluations above it are refused.
class CriticalLine {
public:
    CriticalLine(long n, double t_max, const PrecisionContext& ctx);

    long n() const { return n_; }
    long k() const { return 4 * n_ - 3; }
    double t_max() const { return t_max_; }
    int working_digits() const { return wd_; }
    size_t nodes() const { return u_.size(); }
    long terms() const { return M_; }

    /// Complex form of the theta integral with y^(s+a) and y^(1-s+a) kept apart.
    Complex completed_lambda(double t) const;
    /// The same integral at a general s near the critical strip, |Re s - 1/2| <= 3.
    Complex completed_lambda_at(const Complex& s) const;
    /// Z(t) = Lambda(1/2+it) / |(7/2pi)^(1/2+it) Gamma(1/2 + it + a)|; Z(0) = L(1/2).
    Real hardy_Z(double t) const;
    /// Z(t) up to the positive factor Gamma(n')/|Gamma(n'+it)|; same sign, cheaper.
    Real scaled_Z(double t) const;

    ZeroRecord zeros(double T) const;

private:
    void build_nodes(double h, std::vector<Real>& u, std::vector<Real>& wF) const;
    Real integral(const std::vector<Real>& u, const std::vector<Real>& wF, double t) const;
    void check_t(double t) const;

    long n_;
    long np_;  // n' = 2n - 1, so a + 1/2 = n'
    double t_max_;
    PrecisionContext ctx_;
    int wd_;
    long M_;
    double z_lo_ = 0, z_hi_ = 0, U_ = 0;
    std::vector<Real> b_;  // a_m / sqrt m
    std::vector<Real> log_m_;
    Real log_Q_;
    Real lgamma_np_;
    std::vector<Real> u_;
    std::vector<Real> wF_;
};

Complex completed_lambda(long n, double t, const PrecisionContext& ctx);
Real hardy_Z(long n, double t, const PrecisionContext& ctx);
ZeroRecord zeros_up_to(long n, double T, const PrecisionContext& ctx);

/// Grid step of the zero scan, a quarter of the mean spacing.
double zero_scan_step(long n);

}  // namespace hecke::lcentral
