#include "casipol/reflection.hpp"

#include <cmath>
#include <stdexcept>

namespace casipol {

UniaxialLayer UniaxialLayer::slab(double eps_x, double eps_z, double d_over_2a) {
    if (!(d_over_2a > 0.0))
        throw std::invalid_argument("UniaxialLayer: thickness ratio must be > 0");
    return {eps_x, eps_z, d_over_2a};
}

double coth_clamped(double t) {
    if (t > 20.0) return 1.0;
    // (1 + e^{-2t}) / (1 - e^{-2t}), with expm1 keeping the small-t
    // denominator exact.
    return (1.0 + std::exp(-2.0 * t)) / (-std::expm1(-2.0 * t));
}

namespace {

double f_impl(double y, double zeta, double eps, const char* what) {
    if (zeta == 0.0) return y;  // also avoids 0 * inf for metallic eps
    double radicand = y * y + zeta * zeta * (eps - 1.0);
    if (radicand < 0.0)
        throw std::domain_error(std::string(what) + ": negative radicand (eps < 1)");
    return std::sqrt(radicand);
}

}  // namespace

double f_z(double y, double zeta, double eps_z) { return f_impl(y, zeta, eps_z, "f_z"); }
double f_x(double y, double zeta, double eps_x) { return f_impl(y, zeta, eps_x, "f_x"); }

double r_parallel(const UniaxialLayer& layer, double zeta, double y) {
    double p = layer.eps_x * layer.eps_z;
    if (y == 0.0 && zeta == 0.0) {
        // Continuous y -> 0+ limit at zero frequency.
        if (std::isinf(p)) return 1.0;
        if (layer.is_semispace()) {
            double sp = std::sqrt(p);
            return (sp - 1.0) / (sp + 1.0);
        }
        return 0.0;  // coth divergence kills the finite slab
    }
    if (std::isinf(p)) return 1.0;
    double fz = f_z(y, zeta, layer.eps_z);
    double c = layer.is_semispace() ? 1.0 : coth_clamped(fz * layer.thickness_ratio);
    double num = p * y * y - fz * fz;
    double den = p * y * y + fz * fz + 2.0 * std::sqrt(p) * y * fz * c;
    return num / den;
}

double r_perp(const UniaxialLayer& layer, double zeta, double y) {
    if (zeta == 0.0) return 0.0;  // f_x = y at zero frequency
    if (std::isinf(layer.eps_x)) return 1.0;
    double fx = f_x(y, zeta, layer.eps_x);
    double c = layer.is_semispace() ? 1.0 : coth_clamped(fx * layer.thickness_ratio);
    double num = fx * fx - y * y;
    double den = y * y + fx * fx + 2.0 * y * fx * c;
    return num / den;
}

}  // namespace casipol
