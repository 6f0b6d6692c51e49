#pragma once

#include "hecke/real.hpp"

#include <memory>
#include <vector>

namespace hecke::quad {

struct Rule {
    std::vector<Real> nodes;    // on [-1, 1]
    std::vector<Real> weights;
};

/// n-point Gauss-Legendre rule at the calling thread's working precision.
/// Rules are cached per (n, precision) and shared read-only.
std::shared_ptr<const Rule> gauss_legendre(int n);

/// Integrate f over [a, b] split into `panels` equal Gauss-Legendre panels.
template <class F>
Real integrate(F&& f, const Real& a, const Real& b, int panels, int order = 32) {
    auto rule = gauss_legendre(order);
    const Real h = (b - a) / Real(panels);
    const Real half = h / 2;
    Real total(0);
    for (int p = 0; p < panels; ++p) {
        const Real mid = a + h * Real(p) + half;
        Real panel(0);
        for (size_t i = 0; i < rule->nodes.size(); ++i) panel += rule->weights[i] * f(mid + half * rule->nodes[i]);
        total += panel * half;
    }
    return total;
}

}  // namespace hecke::quad
