#include "hecke/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hecke {

namespace {

thread_local mpfr_prec_t tl_working_bits = 0;

mpfr_prec_t default_bits() {
    static const mpfr_prec_t bits = digits_to_bits(PrecisionContext{}.total_digits());
    return bits;
}

mpfr_prec_t wider(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits10) {
    return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873623)) + 8;
}

mpfr_prec_t working_bits() {
    return tl_working_bits ? tl_working_bits : default_bits();
}

mpfr_prec_t PrecisionContext::bits() const { return digits_to_bits(total_digits()); }

double PrecisionContext::tolerance() const { return std::pow(10.0, -digits); }

void PrecisionContext::validate() const {
    if (digits < kMinDigits) {
        throw PrecisionError("requested " + std::to_string(digits) +
                             " digits; at least " + std::to_string(kMinDigits) + " are required");
    }
    if (digits > kMaxDigits || guard < 0) {
        throw PrecisionError("requested " + std::to_string(digits) +
                             " digits exceeds the configured maximum of " +
                             std::to_string(kMaxDigits));
    }
}

ScopedPrecision::ScopedPrecision(const PrecisionContext& ctx) : saved_(tl_working_bits) {
    ctx.validate();
    tl_working_bits = ctx.bits();
}

ScopedPrecision::ScopedPrecision(mpfr_prec_t bits) : saved_(tl_working_bits) {
    tl_working_bits = std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN);
}

ScopedPrecision::~ScopedPrecision() { tl_working_bits = saved_; }

// --- Real ------------------------------------------------------------------

Real::Real(mpfr_prec_t bits, int) { mpfr_init2(v_, bits); }

Real Real::with_precision(mpfr_prec_t bits) {
    Real r(bits, 0);
    mpfr_set_zero(r.v_, 1);
    return r;
}

Real::Real() : Real(working_bits(), 0) { mpfr_set_zero(v_, 1); }
Real::Real(int v) : Real(working_bits(), 0) { mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(long v) : Real(working_bits(), 0) { mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(long long v) : Real(working_bits(), 0) { mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN); }
Real::Real(unsigned long v) : Real(working_bits(), 0) { mpfr_set_ui(v_, v, MPFR_RNDN); }
Real::Real(double v) : Real(working_bits(), 0) { mpfr_set_d(v_, v, MPFR_RNDN); }
Real::Real(const mpz_class& z) : Real(working_bits(), 0) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
Real::Real(const mpq_class& q) : Real(working_bits(), 0) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

Real::Real(const std::string& decimal) : Real(working_bits(), 0) {
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: " + decimal);
    }
}

Real::Real(const Real& o) : Real(o.precision(), 0) { mpfr_set(v_, o.v_, MPFR_RNDN); }

Real::Real(Real&& o) noexcept : Real(o.precision(), 0) { mpfr_swap(v_, o.v_); }

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        if (precision() != o.precision()) mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int sig) const {
    std::vector<char> buf(static_cast<size_t>(sig) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(sig - 1, 0), v_);
    return buf.data();
}

std::string Real::to_fixed(int places) const {
    const long e10 = is_zero() ? 0 : static_cast<long>(std::abs(exponent2()) * 0.30103) + 8;
    std::vector<char> buf(static_cast<size_t>(places + e10) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", places, v_);
    return buf.data();
}

long Real::exponent2() const {
    if (!mpfr_regular_p(v_)) return mpfr_zero_p(v_) ? -1000000000L : 1000000000L;
    return mpfr_get_exp(v_);
}

Real& Real::operator+=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator-(const Real& a) {
    Real r(a.precision(), 0);
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}
Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b), 0);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b), 0);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b), 0);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b), 0);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

// --- functions -------------------------------------------------------------

namespace {

template <class F>
Real unary(const Real& x, F f) {
    Real r = Real::with_precision(x.precision());
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tgamma(const Real& x) { return unary(x, mpfr_gamma); }

Real floor(const Real& x) {
    Real r = Real::with_precision(x.precision());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real lgamma(const Real& x) {
    Real r = Real::with_precision(x.precision());
    int sign = 0;
    mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
    return r;
}

void sin_cos(const Real& x, Real& s, Real& c) {
    s = Real::with_precision(x.precision());
    c = Real::with_precision(x.precision());
    mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
}

Real pow(const Real& x, const Real& y) {
    Real r = Real::with_precision(std::max(x.precision(), y.precision()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n) {
    Real r = Real::with_precision(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r = Real::with_precision(std::max(x.precision(), y.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real const_pi() {
    Real r;
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real const_log2() {
    Real r;
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

Real const_euler() {
    Real r;
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

Real pow10_neg(int digits) {
    Real r(10);
    mpfr_pow_si(r.raw(), r.raw(), -digits, MPFR_RNDN);
    return r;
}

// --- Complex ---------------------------------------------------------------

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    const Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) {
    Real r = Real::with_precision(std::max(z.re.precision(), z.im.precision()));
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex polar(const Real& r, const Real& theta) {
    Real s, c;
    sin_cos(theta, s, c);
    return {r * c, r * s};
}

Complex exp(const Complex& z) { return polar(exp(z.re), z.im); }

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex pow(const Real& b, const Complex& z) { return exp(z * log(b)); }

}  // namespace hecke
