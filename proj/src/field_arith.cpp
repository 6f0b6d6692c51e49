#include "hecke/field_arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hecke::field {

mpz_class Z7Int::norm() const { return a * a + a * b + 2 * b * b; }

Z7Int Z7Int::conjugate() const { return {a + b, -b}; }

mpz_class Z7Int::trace() const { return 2 * a + b; }

Z7Int& Z7Int::operator*=(const Z7Int& o) {
    // (a + b eta)(c + d eta) = (ac - 2bd) + (ad + bc + bd) eta
    mpz_class bd = b * o.b;
    mpz_class na = a * o.a - 2 * bd;
    b = a * o.b + b * o.a + bd;
    a = std::move(na);
    return *this;
}

Z7Int pow(const Z7Int& x, unsigned long k) {
    Z7Int result(1, 0);
    Z7Int base = x;
    while (k) {
        if (k & 1UL) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

long long norm(long long a, long long b) { return a * a + a * b + 2 * b * b; }

int legendre7(long long n) {
    long long r = n % 7;
    if (r < 0) r += 7;
    switch (r) {
        case 0: return 0;
        case 1: case 2: case 4: return 1;
        default: return -1;
    }
}

int epsilon(long long a, long long b) {
    // reduce first so the cubic cannot overflow
    long long x = ((a % 7) + 7) % 7;
    long long y = ((b % 7) + 7) % 7;
    return legendre7(x * x * x - 2 * x * x * y - x * y * y + y * y * y);
}

std::vector<Rep> representations(long m) {
    if (m < 1) throw std::invalid_argument("representations: m must be positive");
    std::vector<Rep> out;
    const long bmax = static_cast<long>(std::floor(std::sqrt(4.0 * m / 7.0))) + 1;
    for (long b = -bmax; b <= bmax; ++b) {
        // a^2 + ab + 2b^2 = m  =>  a = (-b +- sqrt(4m - 7b^2)) / 2
        const long long disc = 4LL * m - 7LL * b * b;
        if (disc < 0) continue;
        long long d = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
        while (d * d > disc) --d;
        while ((d + 1) * (d + 1) <= disc) ++d;
        if (d * d != disc) continue;
        for (long long sgn : {-1LL, 1LL}) {
            const long long num = -b + sgn * d;
            if (num % 2 != 0) continue;
            const Rep r{static_cast<long>(num / 2), b};
            if (d == 0 && sgn == 1) break;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const Rep& x, const Rep& y) {
        return x.b != y.b ? x.b < y.b : x.a < y.a;
    });
    return out;
}

std::vector<std::vector<Rep>> representation_table(long max_m) {
    std::vector<std::vector<Rep>> table(static_cast<size_t>(std::max(max_m, 0L)) + 1);
    const long bmax = static_cast<long>(std::floor(std::sqrt(4.0 * max_m / 7.0))) + 1;
    for (long b = -bmax; b <= bmax; ++b) {
        const long amax = static_cast<long>(std::sqrt(static_cast<double>(max_m))) + bmax + 2;
        for (long a = -amax; a <= amax; ++a) {
            const long long q = norm(a, b);
            if (q >= 1 && q <= max_m) table[static_cast<size_t>(q)].push_back({a, b});
        }
    }
    // b-major loop order already sorts by (b, a)
    return table;
}

bool is_half_representative(const Rep& r) { return r.b > 0 || (r.b == 0 && r.a > 0); }

Z7Int character_sum(long k, long m) {
    Z7Int total(0, 0);
    for (const Rep& r : representations(m)) {
        const int e = epsilon(r.a, r.b);
        if (e == 0) continue;
        Z7Int p = pow(Z7Int(r.a, r.b), static_cast<unsigned long>(k));
        if (e > 0) {
            total.a += p.a;
            total.b += p.b;
        } else {
            total.a -= p.a;
            total.b -= p.b;
        }
    }
    return total;
}

mpz_class hecke_coeff(long k, long m) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("hecke_coeff: k must be odd and positive");
    // For odd k, x and -x contribute equally, so one representative per pair
    // gives the half sum directly.
    Z7Int total(0, 0);
    for (const Rep& r : representations(m)) {
        if (!is_half_representative(r)) continue;
        const int e = epsilon(r.a, r.b);
        if (e == 0) continue;
        Z7Int p = pow(Z7Int(r.a, r.b), static_cast<unsigned long>(k));
        if (e > 0) {
            total.a += p.a;
            total.b += p.b;
        } else {
            total.a -= p.a;
            total.b -= p.b;
        }
    }
    if (total.b != 0) throw std::logic_error("hecke_coeff: character sum is not rational");
    return total.a;
}

Real normalized_coeff(long k, long m, const PrecisionContext& ctx) {
    ScopedPrecision sp(ctx);
    const Real c(hecke_coeff(k, m));
    return c * exp(Real(-0.5) * Real(k) * log(Real(m)));
}

Real theta(long long a, long long b, const PrecisionContext& ctx) {
    if (a == 0 && b == 0) throw std::invalid_argument("theta: zero element");
    ScopedPrecision sp(ctx);
    // a + b eta = (a + b/2) + i b sqrt(7)/2
    const Real re = Real(2 * a + b);
    const Real im = Real(b) * sqrt(Real(7));
    Real t = atan2(im, re) / (2 * const_pi());
    if (t.sign() < 0) t += 1;
    if (t >= Real(1)) t -= 1;
    return t;
}

bool is_quarter_turn(long long a, long long b) { return b == 0 || 2 * a == -b; }

PrimeClass prime_class(long p) {
    if (p == 7) return PrimeClass::ramified;
    return legendre7(p) == 1 ? PrimeClass::split : PrimeClass::inert;
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::pair<long, int> prime_power(long n) {
    if (n < 2) return {0, 0};
    auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return f.front();
}

CoeffTable CoeffTable::build(long k, long max_m, const PrecisionContext& ctx) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("CoeffTable: k must be odd and positive");
    ScopedPrecision sp(ctx);
    CoeffTable t;
    t.k = k;
    t.max_m = max_m;
    t.exact.assign(static_cast<size_t>(max_m) + 1, mpz_class(0));
    t.normalized.assign(static_cast<size_t>(max_m) + 1, Real(0));
    const auto reps = representation_table(max_m);
    for (long m = 1; m <= max_m; ++m) {
        Z7Int total(0, 0);
        for (const Rep& r : reps[static_cast<size_t>(m)]) {
            if (!is_half_representative(r)) continue;
            const int e = epsilon(r.a, r.b);
            if (e == 0) continue;
            Z7Int p = pow(Z7Int(r.a, r.b), static_cast<unsigned long>(k));
            if (e > 0) total.a += p.a; else total.a -= p.a;
        }
        t.exact[static_cast<size_t>(m)] = total.a;
        t.normalized[static_cast<size_t>(m)] =
            Real(total.a) * exp(Real(-0.5) * Real(k) * log(Real(m)));
    }
    return t;
}

CoeffSweep::CoeffSweep(long k0, long step, long max_m) : k_(k0), step_(step), max_m_(max_m) {
    if (k0 < 1 || k0 % 2 == 0 || step % 2 != 0 || step < 0)
        throw std::invalid_argument("CoeffSweep: need odd k0 and even nonnegative step");
    const auto reps = representation_table(max_m);
    first_slot_.assign(static_cast<size_t>(max_m) + 2, 0);
    for (long m = 1; m <= max_m; ++m) {
        first_slot_[static_cast<size_t>(m)] = slots_.size();
        for (const Rep& r : reps[static_cast<size_t>(m)]) {
            if (!is_half_representative(r)) continue;
            const int e = epsilon(r.a, r.b);
            if (e == 0) continue;
            const Z7Int x(r.a, r.b);
            slots_.push_back({m, e, pow(x, static_cast<unsigned long>(k0)),
                              pow(x, static_cast<unsigned long>(step))});
        }
    }
    first_slot_[static_cast<size_t>(max_m) + 1] = slots_.size();
}

void CoeffSweep::advance() {
    const long n = static_cast<long>(slots_.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        Slot& s = slots_[static_cast<size_t>(i)];
        s.power *= s.step_factor;
    }
    k_ += step_;
}

mpz_class CoeffSweep::exact(long m) const {
    if (m < 1 || m > max_m_) throw std::out_of_range("CoeffSweep: m outside table");
    mpz_class total = 0;
    for (size_t i = first_slot_[static_cast<size_t>(m)]; i < first_slot_[static_cast<size_t>(m) + 1]; ++i) {
        if (slots_[i].eps > 0) total += slots_[i].power.a; else total -= slots_[i].power.a;
    }
    return total;
}

Real CoeffSweep::normalized(long m) const {
    return Real(exact(m)) * exp(Real(-0.5) * Real(k_) * log(Real(m)));
}

}  // namespace hecke::field
