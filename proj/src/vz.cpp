#include "hecke/vz.hpp"

#include "hecke/specfun.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke::vz {

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

Poly Poly::constant(const mpq_class& c) { return Poly({c}); }

Poly Poly::linear(const mpq_class& c0, const mpq_class& c1) { return Poly({c0, c1}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
}

mpq_class Poly::operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const mpq_class& s) {
    for (auto& q : c_) q *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
}

namespace {

const Poly& x_poly() {
    static const Poly x = Poly::linear(0, 1);
    return x;
}

}  // namespace

Poly radicand(Radicand r) {
    if (r == Radicand::recursion_form) return Poly::linear(1, 1) * Poly::linear(1, -27);
    return Poly::linear(1, -1) * Poly::linear(1, 27);
}

std::vector<VZPoly> b_sequence(int kmax) {
    if (kmax < 0) throw std::invalid_argument("b_sequence: negative index");
    std::vector<VZPoly> b;
    b.push_back({Poly::constant(mpq_class(1, 2)), {}});
    if (kmax == 0) return b;
    b.push_back({Poly::constant(1), {}});
    // (x - 7)(64x - 7)
    const Poly q = Poly::linear(-7, 1) * Poly::linear(-7, 64);
    for (int k = 1; k < kmax; ++k) {
        const Poly& bk = b[static_cast<size_t>(k)].u;
        const Poly& bkm1 = b[static_cast<size_t>(k - 1)].u;
        Poly next = Poly::linear(-56 * k + 42, 32 * k) * bk - q * bk.derivative() -
                    Poly::linear(7, 11) * bkm1 * mpq_class(2L * k * (2L * k - 1));
        next *= mpq_class(1, 21);
        b.push_back({std::move(next), {}});
    }
    return b;
}

VZPoly b_poly(int k) { return b_sequence(k).back(); }

std::vector<VZPoly> a_sequence(int kmax, Radicand r) {
    if (kmax < 0) throw std::invalid_argument("a_sequence: negative index");
    const Poly rad = radicand(r);
    const Poly drad = rad.derivative();
    const Poly& x = x_poly();
    std::vector<VZPoly> a;
    a.push_back({Poly::constant(1), {}});
    if (kmax == 0) return a;
    a.push_back({{}, Poly::constant(mpq_class(-1, 3))});
    for (int k = 1; k < kmax; ++k) {
        const VZPoly& ak = a[static_cast<size_t>(k)];
        const VZPoly& akm1 = a[static_cast<size_t>(k - 1)];
        const mpq_class c(2 * k + 1, 3);
        // s (x d/dx - c)(u + v s) = r (x v' - c v) + x v r'/2 + (x u' - c u) s
        VZPoly next;
        next.u = rad * (x * ak.v.derivative() - ak.v * c) + x * ak.v * drad * mpq_class(1, 2);
        next.v = x * ak.u.derivative() - ak.u * c;
        const Poly damp = Poly::linear(1, -5) * mpq_class(static_cast<long>(k) * k, 9);
        next.u -= damp * akm1.u;
        next.v -= damp * akm1.v;
        a.push_back(std::move(next));
    }
    return a;
}

mpq_class B_of(long n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("B_of: n must be odd and positive");
    const int k = static_cast<int>((n - 1) / 2);
    return b_sequence(k)[static_cast<size_t>(k)].u(0);
}

mpq_class A_of(long n) {
    if (n < 1) throw std::invalid_argument("A_of: n must be positive");
    if (n % 2 == 0) return 0;
    const mpq_class b = B_of(n);
    return b * b;
}

mpq_class A_via_a_path(long n, Radicand r) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("A_via_a_path: n must be odd and positive");
    const int k = static_cast<int>(n - 1);
    const VZPoly ak = a_sequence(k, r)[static_cast<size_t>(k)];
    // even index: the s-component vanishes identically
    if (!ak.v.is_zero()) throw std::logic_error("a-path: even index produced an s-component");
    return ak.u(-1) / 4;
}

namespace {

Real exact_L(long n, const mpq_class& A, const PrecisionContext& ctx) {
    const auto& c = specfun::constants(ctx);
    ScopedPrecision sp(ctx);
    return 2 * pow(c.two_pi_over_sqrt7, n) * pow(c.omega, 2 * n - 1) * Real(A) / tgamma(Real(n));
}

}  // namespace

ExactCentral central_value_exact(long n, const PrecisionContext& ctx) {
    ctx.validate();
    if (n < 1) throw std::invalid_argument("central_value_exact: n must be positive");
    ExactCentral e;
    e.n = n;
    if (n % 2 == 0) {
        ScopedPrecision sp(ctx);
        e.A = 0;
        e.B = 0;
        e.L = Real(0);
        return e;
    }
    e.B = B_of(n);
    e.A = e.B * e.B;
    e.L = exact_L(n, e.A, ctx);
    return e;
}

std::vector<ExactCentral> central_values_exact(long max_n, const PrecisionContext& ctx) {
    ctx.validate();
    std::vector<ExactCentral> out;
    if (max_n < 1) return out;
    const auto b = b_sequence(static_cast<int>((max_n - 1) / 2));
    for (long n = 1; n <= max_n; n += 2) {
        ExactCentral e;
        e.n = n;
        e.B = b[static_cast<size_t>((n - 1) / 2)].u(0);
        e.A = e.B * e.B;
        e.L = exact_L(n, e.A, ctx);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CongruenceRow> congruence_check(long max_n) {
    std::vector<CongruenceRow> rows;
    if (max_n < 3) return rows;
    const auto b = b_sequence(static_cast<int>((max_n - 1) / 2));
    for (long n = 3; n <= max_n; n += 2) {
        const mpq_class B = b[static_cast<size_t>((n - 1) / 2)].u(0);
        CongruenceRow row{n, -1, false};
        if (B.get_den() == 1) {
            mpz_class r = B.get_num() % 4;
            if (r < 0) r += 4;
            row.B_mod4 = static_cast<int>(r.get_si());
            const long want = ((-n) % 4 + 4) % 4;
            row.pass = row.B_mod4 == want && B != 0;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string factor_string(const mpz_class& n0) {
    if (n0 <= 0) throw std::invalid_argument("factor_string: positive argument required");
    if (n0 == 1) return "1";
    mpz_class n = n0;
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const mpz_class& p, int e) {
        if (!first) os << '*';
        first = false;
        os << p.get_str();
        if (e > 1) os << '^' << e;
    };
    for (unsigned long p = 2; mpz_class(p) * p <= n; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e) emit(p, e);
        if (p > 100000000UL) break;
    }
    if (n > 1) emit(n, 1);
    return os.str();
}

std::string A_factored(long n) {
    if (n % 2 == 0) return "0";
    const mpq_class B = B_of(n);
    if (B.get_den() != 1) return mpq_class(B * B).get_str();
    const mpz_class absB = abs(B.get_num());
    if (absB == 1) return "1";
    const std::string f = factor_string(absB);
    if (f.find('*') == std::string::npos && f.find('^') == std::string::npos) return f + "^2";
    return "(" + f + ")^2";
}

}  // namespace hecke::vz
