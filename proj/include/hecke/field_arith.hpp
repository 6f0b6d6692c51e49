#pragma once

// Exact arithmetic in Z[eta], eta = (1 + sqrt(-7)) / 2, the ring of integers
// of Q(sqrt(-7)), and the Groessencharacter coefficients built on it.

#include "hecke/real.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace hecke::field {

/// a + b*eta with eta^2 = eta - 2.
struct Z7Int {
    mpz_class a;
    mpz_class b;

    Z7Int() = default;
    Z7Int(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}
    Z7Int(long a_, long b_) : a(a_), b(b_) {}

    mpz_class norm() const;
    /// Complex conjugate (a + b, -b).
    Z7Int conjugate() const;
    /// 2 * real part, i.e. the trace 2a + b.
    mpz_class trace() const;

    Z7Int& operator*=(const Z7Int& o);
    friend Z7Int operator*(Z7Int x, const Z7Int& y) { return x *= y; }
    friend Z7Int operator-(const Z7Int& x) { return {-x.a, -x.b}; }
    friend bool operator==(const Z7Int& x, const Z7Int& y) { return x.a == y.a && x.b == y.b; }
};

/// x^k by binary powering, exact.
Z7Int pow(const Z7Int& x, unsigned long k);

/// A representation (a, b) of m by the norm form a^2 + ab + 2b^2.
struct Rep {
    long a;
    long b;
    friend bool operator==(const Rep&, const Rep&) = default;
};

long long norm(long long a, long long b);
/// Legendre symbol ((a^3 - 2a^2 b - a b^2 + b^3) / 7).
int epsilon(long long a, long long b);
/// All (a, b) with a^2 + ab + 2b^2 = m, ordered lexicographically by (b, a).
std::vector<Rep> representations(long m);
/// Representations of every m <= max_m, indexed by m (index 0 is empty).
std::vector<std::vector<Rep>> representation_table(long max_m);

/// One representative from each {x, -x} pair: b > 0, or b == 0 and a > 0.
bool is_half_representative(const Rep& r);

/// Full sum sum_{reps of m} epsilon(a,b) (a + b eta)^k as an element of Z[eta].
/// Even k gives 0; exposed for testing that property.
Z7Int character_sum(long k, long m);

/// chi^(k)(m) for odd k: half the character sum, a rational integer.
mpz_class hecke_coeff(long k, long m);

/// chi^(k)(m) / m^(k/2) at the requested precision.
Real normalized_coeff(long k, long m, const PrecisionContext& ctx);

/// Angle of a + b eta in turns, in [0, 1).
Real theta(long long a, long long b, const PrecisionContext& ctx);

/// True when 4*theta(a, b) is an integer (b == 0 or 2a == -b), decided exactly.
bool is_quarter_turn(long long a, long long b);

enum class PrimeClass { split, inert, ramified };

PrimeClass prime_class(long p);
/// Legendre symbol (n / 7).
int legendre7(long long n);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);
/// If n = p^e for a prime p and e >= 1, returns {p, e}; otherwise {0, 0}.
std::pair<long, int> prime_power(long n);
/// Prime factorisation as (p, e) pairs in increasing p.
std::vector<std::pair<long, int>> factorize(long n);

/// chi^(k)(m) and the normalised coefficients for every m <= max_m.
struct CoeffTable {
    long k = 1;
    long max_m = 0;
    std::vector<mpz_class> exact;   // index m; exact[0] unused
    std::vector<Real> normalized;   // index m; normalized[0] unused

    static CoeffTable build(long k, long max_m, const PrecisionContext& ctx);
};

/// Incremental coefficient generator for an arithmetic progression of odd
/// exponents k, k + step, k + 2*step, ... Each representative keeps its exact
/// power in Z[eta], so moving to the next exponent costs one small
/// multiplication per representation instead of a fresh powering.
class CoeffSweep {
public:
    CoeffSweep(long k0, long step, long max_m);

    long k() const { return k_; }
    long max_m() const { return max_m_; }
    /// Advance to k + step.
    void advance();

    mpz_class exact(long m) const;
    /// chi^(k)(m) / m^(k/2) at the working precision.
    Real normalized(long m) const;

private:
    struct Slot {
        long m;
        int eps;
        Z7Int power;
        Z7Int step_factor;
    };
    long k_;
    long step_;
    long max_m_;
    std::vector<Slot> slots_;
    std::vector<size_t> first_slot_;  // first_slot_[m]..first_slot_[m+1]
};

}  // namespace hecke::field
