#include "casipol/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace casipol {

namespace {

// Laguerre polynomial L_n(x) and its derivative, evaluated by the
// three-term recurrence with power-of-ten rescaling so that orders up
// to several hundred do not overflow at the largest nodes. Returns the
// values as mantissa * 10^(250*scale10).
struct ScaledLaguerre {
    double value;       // L_n mantissa
    double prev;        // L_{n-1} mantissa (same scale)
    long scale10;       // common decimal exponent / 250
};

ScaledLaguerre laguerre_scaled(int n, double x) {
    double p1 = 1.0, p2 = 0.0;
    long scale = 0;
    for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0 - x) * p2 - (j - 1.0) * p3) / j;
        if (std::abs(p1) > 1e250) {
            p1 *= 1e-250;
            p2 *= 1e-250;
            ++scale;
        }
    }
    return {p1, p2, scale};
}

GaussLaguerreRule compute_gauss_laguerre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: order must be >= 1");
    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // Stroud-Secrest style initial guesses.
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 2]);
        }
        bool ok = false;
        double step = 0.0;
        for (int it = 0; it < 200; ++it) {
            ScaledLaguerre L = laguerre_scaled(n, z);
            // L_n'(x) = n (L_n(x) - L_{n-1}(x)) / x ; scale cancels in the ratio.
            double pp = n * (L.value - L.prev) / z;
            double z1 = z;
            z = z1 - L.value / pp;
            step = std::abs(z - z1);
            if (step <= 1e-14 * std::max(1.0, std::abs(z))) {
                ok = true;
                break;
            }
        }
        // high orders can dither by a few ulps around the root
        if (!ok && step > 1e-10 * std::max(1.0, std::abs(z)))
            throw std::runtime_error("gauss_laguerre: Newton iteration stalled");
        rule.nodes[i] = z;
        // w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2), evaluated in logs so that
        // weights beyond the underflow edge degrade to zero instead of NaN.
        ScaledLaguerre Lp = laguerre_scaled(n + 1, z);
        double log_l = std::log(std::abs(Lp.value)) + Lp.scale10 * std::log(1e250);
        double log_w = std::log(z) - 2.0 * std::log(n + 1.0) - 2.0 * log_l;
        rule.weights[i] = std::exp(log_w);
    }
    return rule;
}

GaussLegendreRule compute_gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(3.14159265358979324 * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLaguerreRule& gauss_laguerre(int n) {
    static std::mutex mtx;
    static std::map<int, GaussLaguerreRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_laguerre(n)).first;
    return it->second;
}

const GaussLegendreRule& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

ExpQuadratureResult integrate_exp_weighted(const std::function<double(double)>& g,
                                           double rel_tol, int max_refinements) {
    ExpQuadratureResult res;
    double prev = 0.0;
    bool have_prev = false;
    int n = 16;
    for (int level = 0; level <= max_refinements; ++level, n *= 2) {
        const GaussLaguerreRule& rule = gauss_laguerre(n);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            if (rule.weights[i] == 0.0) continue;
            sum += rule.weights[i] * g(rule.nodes[i]);
        }
        res.value = sum;
        res.refinements = level;
        if (have_prev && std::abs(sum - prev) <= rel_tol * std::abs(sum) + 1e-300) {
            res.converged = true;
            break;
        }
        prev = sum;
        have_prev = true;
    }
    return res;
}

ExpQuadratureResult integrate_exp_panels(const std::function<double(double)>& g,
                                         double scale_hint, double rel_tol,
                                         int max_refinements) {
    constexpr double t_max = 60.0;  // e^{-60} is far below every tolerance here
    double h0 = 0.5 * std::min(std::max(scale_hint, 1e-12), 1.0);
    std::vector<double> edges{0.0};
    for (double h = h0; edges.back() < t_max; h *= 2.0)
        edges.push_back(std::min(edges.back() + h, t_max));

    ExpQuadratureResult res;
    double prev = 0.0;
    bool have_prev = false;
    int order = 8;
    for (int level = 0; level <= max_refinements; ++level, order *= 2) {
        const GaussLegendreRule& rule = gauss_legendre(order);
        double sum = 0.0;
        for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
            double mid = 0.5 * (edges[p] + edges[p + 1]);
            double half = 0.5 * (edges[p + 1] - edges[p]);
            double panel = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                double t = mid + half * rule.nodes[i];
                panel += rule.weights[i] * std::exp(-t) * g(t);
            }
            sum += half * panel;
        }
        res.value = sum;
        res.refinements = level;
        if (have_prev && std::abs(sum - prev) <= rel_tol * std::abs(sum) + 1e-300) {
            res.converged = true;
            break;
        }
        prev = sum;
        have_prev = true;
    }
    return res;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa,
                    double b, double fb, double m, double fm, double whole,
                    double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double h = b - a;
    double left = h / 12.0 * (fa + 4.0 * flm + fm);
    double right = h / 12.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b);
    double m = 0.5 * (a + b), fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // Tolerance is anchored to the first estimate's scale, with a floor so
    // that integrals of exact zeros terminate immediately.
    double tol = rel_tol * std::max(std::abs(whole), 1e-300);
    return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace casipol
