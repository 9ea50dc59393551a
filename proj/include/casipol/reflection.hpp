#pragma once

#include <limits>

namespace casipol {

// One uniaxial layer seen at one Matsubara frequency: the two
// permittivities eps_x(i xi_l), eps_z(i xi_l) and the thickness ratio
// d/(2a). thickness_ratio = infinity marks a semispace.
struct UniaxialLayer {
    double eps_x;
    double eps_z;
    double thickness_ratio;  // d/(2a), > 0 or infinite

    static constexpr double infinite_thickness() {
        return std::numeric_limits<double>::infinity();
    }
    static UniaxialLayer semispace(double eps_x, double eps_z) {
        return {eps_x, eps_z, infinite_thickness()};
    }
    static UniaxialLayer slab(double eps_x, double eps_z, double d_over_2a);
    bool is_semispace() const { return thickness_ratio == infinite_thickness(); }
};

// coth(t) for t > 0, stable for small arguments and clamped to 1 above 20.
double coth_clamped(double t);

// f^2 = y^2 + zeta^2 (eps - 1); positive root. Requires y >= zeta >= 0 and
// eps >= 1 (negative radicand reported as a domain error).
double f_z(double y, double zeta, double eps_z);
double f_x(double y, double zeta, double eps_x);

// Reflection coefficients of the layer at (zeta, y), y >= zeta >= 0:
//   r_par  = (ex ez y^2 - fz^2) / (ex ez y^2 + fz^2 + 2 sqrt(ex ez) y fz coth(fz d/(2a)))
//   r_perp = (fx^2 - y^2) / (y^2 + fx^2 + 2 y fx coth(fx d/(2a)))
// with coth -> 1 in the semispace limit. Infinite permittivities yield the
// metallic limits (r_par -> 1, r_perp -> 1 at zeta > 0).
double r_parallel(const UniaxialLayer& layer, double zeta, double y);
double r_perp(const UniaxialLayer& layer, double zeta, double y);

}  // namespace casipol
