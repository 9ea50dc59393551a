#pragma once

#include <functional>
#include <vector>

namespace casipol {

// Nodes and weights of the n-point Gauss-Laguerre rule for the weight
// e^{-t} on [0, inf): integral e^{-t} g(t) dt ~= sum w_i g(x_i).
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Rules are computed once per order and cached; thread-safe.
const GaussLaguerreRule& gauss_laguerre(int n);

// Gauss-Legendre rule on [-1, 1]; cached, thread-safe.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

struct ExpQuadratureResult {
    double value = 0.0;
    int refinements = 0;  // doublings performed beyond the initial rule
    bool converged = false;
};

// integral_0^inf e^{-t} g(t) dt by Gauss-Laguerre with node doubling
// (16, 32, 64, ...) until two successive levels agree to rel_tol.
ExpQuadratureResult integrate_exp_weighted(const std::function<double(double)>& g,
                                           double rel_tol, int max_refinements);

// integral_0^inf e^{-t} g(t) dt on geometric panels [0, h], [h, 2h],
// [2h, 4h], ... 2^k h up to t = 60, Gauss-Legendre per panel, with the
// per-panel node count doubling (8, 16, ...) until two successive levels
// agree to rel_tol. The first panel width h = min(scale_hint, 1)/2 adapts
// the grid to integrands whose structure lives on a scale much smaller
// than the exponential weight (reflection coefficients at small zeta).
ExpQuadratureResult integrate_exp_panels(const std::function<double(double)>& g,
                                         double scale_hint, double rel_tol,
                                         int max_refinements);

// Adaptive Simpson on [a, b]; tol is relative to the accumulated integral
// scale. Deterministic refinement order.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth = 40);

}  // namespace casipol
