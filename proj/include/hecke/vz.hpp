#pragma once

// Exact central values through the Rodriguez-Villegas--Zagier recursions.

#include "hecke/real.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hecke::vz {

/// Dense polynomial in x with exact rational coefficients; c[i] is the x^i
/// coefficient and the vector carries no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);
    static Poly constant(const mpq_class& c);
    /// c0 + c1 x
    static Poly linear(const mpq_class& c0, const mpq_class& c1);

    const std::vector<mpq_class>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Poly derivative() const;
    mpq_class operator()(const mpq_class& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpq_class& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const mpq_class& s) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// u(x) + v(x) s with s^2 equal to the chosen radicand.
struct VZPoly {
    Poly u;
    Poly v;
};

/// Which quadratic radicand the a-path uses, both in a_1 and in the recursion.
enum class Radicand {
    recursion_form,  // (1 + x)(1 - 27x)
    initial_form,    // (1 - x)(1 + 27x)
};

Poly radicand(Radicand r);

/// b_0 .. b_kmax.
std::vector<VZPoly> b_sequence(int kmax);
VZPoly b_poly(int k);

/// a_0 .. a_kmax for the given radicand.
std::vector<VZPoly> a_sequence(int kmax, Radicand r);

/// B(n) = b_{(n-1)/2}(0) for odd n.
mpq_class B_of(long n);
/// A(n): 0 for even n, B(n)^2 for odd n.
mpq_class A_of(long n);
/// a_{n-1}(-1)/4 for odd n, the a-path cross-check of A(n).
mpq_class A_via_a_path(long n, Radicand r);

struct ExactCentral {
    long n = 0;
    mpq_class A;
    mpq_class B;
    Real L;
};

/// L(1/2, chi^(2n-1)) = 2 (2 pi/sqrt 7)^n Omega^(2n-1) A(n) / (n-1)!.
ExactCentral central_value_exact(long n, const PrecisionContext& ctx);
/// Same formula for a batch of odd n sharing one b-sequence run.
std::vector<ExactCentral> central_values_exact(long max_n, const PrecisionContext& ctx);

struct CongruenceRow {
    long n;
    int B_mod4;
    bool pass;
};

/// B(n) = -n (mod 4) for every odd 1 < n <= max_n.
std::vector<CongruenceRow> congruence_check(long max_n);

/// "3^2*5*7" style factorisation of a positive integer (trial division).
std::string factor_string(const mpz_class& n);
/// The table's presentation of A(n): "(…)^2", a bare square, or "1/4".
std::string A_factored(long n);

}  // namespace hecke::vz
