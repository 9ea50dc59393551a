#include "casipol/additive_vdw.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casipol/quadrature.hpp"

namespace casipol {

AdditiveModel calibrate(const PermittivityModel& material,
                        const OscillatorModel& particle, double a_ref_nm,
                        double temperature_k, const FreeEnergySettings& settings) {
    if (!(a_ref_nm >= 1.0 && a_ref_nm <= 10.0))
        throw std::invalid_argument("calibrate: a_ref must be in [1, 10] nm");
    ThermalGeometry geom(temperature_k, a_ref_nm);
    FreeEnergyResult ref = free_energy_semispace(geom, material, particle, settings);
    double k = -6.0 * std::pow(a_ref_nm, 3) * ref.value_ev / std::numbers::pi;
    return {k, a_ref_nm, ref.value_ev};
}

double additive_semispace_energy(const AdditiveModel& model, double a_nm) {
    if (!(a_nm > 0.0))
        throw std::invalid_argument("additive_semispace_energy: a must be > 0");
    return -std::numbers::pi * model.strength_k_ev_nm3 / (6.0 * std::pow(a_nm, 3));
}

double interior_energy(const AdditiveModel& model, const CylinderGeometry& shell,
                       double a_nm, double rel_tol) {
    double r0 = shell.inner_radius_nm();
    double r1 = shell.outer_radius_nm();
    if (!(a_nm > 0.0 && a_nm < r0))
        throw std::invalid_argument(
            "interior_energy: particle must sit strictly inside the cavity (0 < a < R0)");
    double rho = r0 - a_nm;  // radial position of the particle

    // J = integral over the annulus of rho' s^-5, s the in-plane distance.
    // Inner integral over the angle (symmetric, peaked at phi = 0), outer
    // over the radius; both adaptive.
    auto angular = [&](double rp) {
        double s2_0 = rho * rho + rp * rp;
        double cross = 2.0 * rho * rp;
        auto f = [&](double phi) {
            double s2 = s2_0 - cross * std::cos(phi);
            return 1.0 / (s2 * s2 * std::sqrt(s2));
        };
        return 2.0 * adaptive_simpson(f, 0.0, std::numbers::pi, 0.1 * rel_tol);
    };
    auto radial = [&](double rp) { return rp * angular(rp); };
    double j = adaptive_simpson(radial, r0, r1, rel_tol);

    return -model.strength_k_ev_nm3 * 3.0 * std::numbers::pi / 8.0 * j;
}

InteratomicModel InteratomicModel::from_oscillator(const OscillatorModel& particle) {
    double alpha0 = particle.alpha0_au() * constants.polarizability_au_nm3;
    return {0.75 * particle.omega0_ev() * alpha0 * alpha0};
}

double interatomic_energy(const InteratomicModel& model, double r_nm) {
    if (!(r_nm > 0.0))
        throw std::invalid_argument("interatomic_energy: r must be > 0");
    return -model.c6_ev_nm6 / std::pow(r_nm, 6);
}

}  // namespace casipol
