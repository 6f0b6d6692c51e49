#pragma once

// Family sweeps over chi^(4n-3), n = 1..N. The parallel kernels are the ones
// the moments and density code use; the serial versions recompute every
// member independently and exist to check them.

#include "hecke/lcentral.hpp"
#include "hecke/real.hpp"

#include <vector>

namespace hecke::sweep {

struct FamilyCentral {
    long n = 0;   // family index
    long np = 0;  // 2n - 1, so the value is L(1/2, chi^(2 np - 1))
    Real value;
    Real tail_bound;
};

/// Working digits for a sweep reaching exponent kmax: 48 + kmax/40, or more
/// if the caller asks for more.
int sweep_digits(long kmax, const PrecisionContext& ctx);

/// L(1/2, chi^(4n-3)) for n = 1..N in one pass: coefficients advance by
/// exponent 4 per step and each Q(n', 2 pi m/7) moves up by
/// Q(n'+2) = Q(n') + t_n' + t_(n'+1), t_j = x^j e^-x / j!. Parallel over m.
std::vector<FamilyCentral> central_values(long N, const PrecisionContext& ctx);

/// Same values from independent per-n series evaluations.
std::vector<FamilyCentral> central_values_serial(long N, const PrecisionContext& ctx);

/// Zero records for n = 1..N, parallel over n.
std::vector<lcentral::ZeroRecord> zeros(long N, double T, const PrecisionContext& ctx);
std::vector<lcentral::ZeroRecord> zeros_serial(long N, double T, const PrecisionContext& ctx);

}  // namespace hecke::sweep
