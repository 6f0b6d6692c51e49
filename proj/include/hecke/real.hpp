#pragma once

// Arbitrary-precision real and complex scalars over MPFR.
//
// Every Real carries its own precision. Freshly constructed values take the
// calling thread's working precision (see ScopedPrecision); binary operations
// produce a result at the larger of the two operand precisions. Nothing here
// touches process-wide state, so values can be used freely from OpenMP workers
// as long as each worker opens its own ScopedPrecision.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hecke {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decimal working precision plus guard digits.
struct PrecisionContext {
    int digits = 64;
    int guard = 10;

    static constexpr int kMinDigits = 15;
    static constexpr int kMaxDigits = 4000;

    int total_digits() const { return digits + guard; }
    mpfr_prec_t bits() const;
    /// 10^(-digits), the absolute error target every output is held to.
    double tolerance() const;
    /// Throws PrecisionError when digits is outside [kMinDigits, kMaxDigits].
    void validate() const;
    PrecisionContext with_digits(int d) const { return {d, guard}; }
};

mpfr_prec_t digits_to_bits(int digits10);
mpfr_prec_t working_bits();

/// Sets the calling thread's working precision for the lifetime of the guard.
class ScopedPrecision {
public:
    explicit ScopedPrecision(const PrecisionContext& ctx);
    explicit ScopedPrecision(mpfr_prec_t bits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    mpfr_prec_t saved_;
};

class Real {
public:
    Real();
    Real(int v);  // NOLINT(google-explicit-constructor)
    Real(long v);  // NOLINT
    Real(long long v);  // NOLINT
    Real(unsigned long v);  // NOLINT
    Real(double v);  // NOLINT
    explicit Real(const mpz_class& z);
    explicit Real(const mpq_class& q);
    explicit Real(const std::string& decimal);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    /// Scientific notation with `sig` significant digits.
    std::string to_string(int sig) const;
    /// Fixed notation with `places` digits after the point.
    std::string to_fixed(int places) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
    long exponent2() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator-(const Real& a);
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

    static Real with_precision(mpfr_prec_t bits);

private:
    explicit Real(mpfr_prec_t bits, int /*tag*/);
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(const Real& x, Real& s, Real& c);
Real atan2(const Real& y, const Real& x);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
/// log|Gamma(x)| for real x (MPFR).
Real lgamma(const Real& x);
/// Gamma(x) for real x (MPFR).
Real tgamma(const Real& x);

Real const_pi();
Real const_log2();
/// Euler-Mascheroni constant at working precision (MPFR's Brent-McMillan).
Real const_euler();
/// 10^(-digits) at working precision.
Real pow10_neg(int digits);

/// Minimal complex number over Real. Only the operations the L-function code
/// needs are provided.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(const Real& s, const Complex& a) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
};

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
/// b^z for a positive real base b.
Complex pow(const Real& b, const Complex& z);
Complex polar(const Real& r, const Real& theta);

}  // namespace hecke
