#include "hecke/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace hecke::quad {

namespace {

std::shared_ptr<const Rule> build(int n) {
    auto rule = std::make_shared<Rule>();
    rule->nodes.resize(static_cast<size_t>(n));
    rule->weights.resize(static_cast<size_t>(n));
    const Real pi = const_pi();
    const Real eps = pow(Real(2), -static_cast<long>(working_bits()) + 8);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-like starting guess, then Newton on P_n
        Real x = cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
        Real dp;
        for (int iter = 0; iter < 100; ++iter) {
            Real p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((Real(2 * k - 1) * x * p1) - Real(k - 1) * p0) / Real(k);
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            dp = Real(n) * (x * p1 - p0) / (x * x - 1);
            const Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) <= eps) break;
        }
        // recompute the derivative at the converged node
        Real p0(1), p1 = x;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((Real(2 * k - 1) * x * p1) - Real(k - 1) * p0) / Real(k);
            p0 = std::move(p1);
            p1 = std::move(p2);
        }
        dp = Real(n) * (x * p1 - p0) / (x * x - 1);
        const Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
        rule->nodes[static_cast<size_t>(i)] = -x;
        rule->weights[static_cast<size_t>(i)] = w;
        rule->nodes[static_cast<size_t>(n - 1 - i)] = x;
        rule->weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return rule;
}

}  // namespace

std::shared_ptr<const Rule> gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const Rule>> cache;
    const auto key = std::make_pair(n, working_bits());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto rule = build(n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace hecke::quad
