#include "hecke/sweep.hpp"

#include "hecke/field_arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke::sweep {

int sweep_digits(long kmax, const PrecisionContext& ctx) {
    return std::max(ctx.digits, 48 + static_cast<int>(kmax / 40));
}

std::vector<FamilyCentral> central_values(long N, const PrecisionContext& ctx) {
    if (N < 1) throw std::invalid_argument("central_values: N must be positive");
    ctx.validate();
    const long np_max = 2 * N - 1;
    const PrecisionContext wctx = ctx.with_digits(sweep_digits(4 * N - 3, ctx));
    wctx.validate();
    const lcentral::SeriesPlan plan = lcentral::plan_series(np_max, wctx.digits);
    const long M = plan.terms;

    ScopedPrecision sp(wctx);
    const mpfr_prec_t bits = working_bits();
    field::CoeffSweep coeffs(1, 4, M);
    const Real h = 2 * const_pi() / 7;

    // per-m state: Q(n', x_m) and the next Poisson term t_n'(x_m), n' = 1 to start
    std::vector<Real> x(static_cast<size_t>(M) + 1), q(x.size()), t(x.size()), inv_sqrt(x.size()), term(x.size());
    for (long m = 1; m <= M; ++m) {
        const size_t i = static_cast<size_t>(m);
        x[i] = h * Real(m);
        q[i] = exp(-x[i]);
        t[i] = x[i] * q[i];
        inv_sqrt[i] = Real(1) / sqrt(Real(m));
    }

    std::vector<FamilyCentral> out;
    out.reserve(static_cast<size_t>(N));
    for (long n = 1; n <= N; ++n) {
        const long np = 2 * n - 1;
        if (n > 1) {
            coeffs.advance();
#pragma omp parallel for schedule(static)
            for (long m = 1; m <= M; ++m) {
                ScopedPrecision tsp(bits);
                const size_t i = static_cast<size_t>(m);
                // from n' - 2 to n': add t_(n'-2) and t_(n'-1)
                q[i] += t[i];
                t[i] = t[i] * x[i] / Real(np - 1);
                q[i] += t[i];
                t[i] = t[i] * x[i] / Real(np);
            }
        }
#pragma omp parallel for schedule(static)
        for (long m = 1; m <= M; ++m) {
            ScopedPrecision tsp(bits);
            const size_t i = static_cast<size_t>(m);
            const mpz_class c = coeffs.exact(m);
            term[i] = c == 0 ? Real(0) : coeffs.normalized(m) * inv_sqrt[i] * q[i];
        }
        Real sum(0);
        for (long m = 1; m <= M; ++m) sum += term[static_cast<size_t>(m)];
        FamilyCentral fc;
        fc.n = n;
        fc.np = np;
        fc.value = 2 * sum;
        fc.tail_bound = exp(Real(lcentral::log_tail_bound(np, M)));
        out.push_back(std::move(fc));
    }
    return out;
}

std::vector<FamilyCentral> central_values_serial(long N, const PrecisionContext& ctx) {
    if (N < 1) throw std::invalid_argument("central_values_serial: N must be positive");
    const PrecisionContext wctx = ctx.with_digits(sweep_digits(4 * N - 3, ctx));
    std::vector<FamilyCentral> out;
    for (long n = 1; n <= N; ++n) {
        const auto cv = lcentral::central_value_series(2 * n - 1, wctx);
        out.push_back({n, 2 * n - 1, cv.value, cv.tail_bound});
    }
    return out;
}

std::vector<lcentral::ZeroRecord> zeros(long N, double T, const PrecisionContext& ctx) {
    if (N < 1) throw std::invalid_argument("zeros: N must be positive");
    std::vector<lcentral::ZeroRecord> out(static_cast<size_t>(N));
    std::vector<std::exception_ptr> errors(out.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = N; n >= 1; --n) {
        try {
            out[static_cast<size_t>(n - 1)] = lcentral::zeros_up_to(n, T, ctx);
        } catch (...) {
            errors[static_cast<size_t>(n - 1)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<lcentral::ZeroRecord> zeros_serial(long N, double T, const PrecisionContext& ctx) {
    std::vector<lcentral::ZeroRecord> out;
    for (long n = 1; n <= N; ++n) out.push_back(lcentral::zeros_up_to(n, T, ctx));
    return out;
}

}  // namespace hecke::sweep
