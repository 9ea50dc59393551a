#pragma once

#include "casipol/free_energy.hpp"

namespace casipol {

// Pairwise-additive wall model: pair potential -K/r^6 integrated over the
// wall volume, K = n C6 absorbed into one strength constant, normalized
// so the additive semispace energy matches the Lifshitz semispace value
// at the calibration separation.
struct AdditiveModel {
    double strength_k_ev_nm3;       // K > 0
    double reference_separation_nm; // a_ref of the calibration
    double lifshitz_reference_ev;   // matched semispace value (negative)
};

// Calibrates K from free_energy_semispace(a_ref): -pi K / (6 a_ref^3) =
// F^s(a_ref). Requires a_ref in [1, 10] nm.
AdditiveModel calibrate(const PermittivityModel& material,
                        const OscillatorModel& particle, double a_ref_nm,
                        double temperature_k, const FreeEnergySettings& settings = {});

// Additive energy of a particle at distance a above a half-space of
// strength K: -pi K / (6 a^3).
double additive_semispace_energy(const AdditiveModel& model, double a_nm);

// Particle inside an infinite cylindrical shell, at distance a from the
// internal surface (radial position R0 - a). The pair potential is
// integrated analytically along the axis (giving a (3 pi / 8) s^-5
// in-plane kernel) and numerically over the annular cross-section.
double interior_energy(const AdditiveModel& model, const CylinderGeometry& shell,
                       double a_nm, double rel_tol = 1e-7);

// Nonretarded London interaction of two identical particles:
// E(r) = -C6 / r^6, C6 = (3/4) omega0 alpha(0)^2.
struct InteratomicModel {
    double c6_ev_nm6;
    static InteratomicModel from_oscillator(const OscillatorModel& particle);
};

double interatomic_energy(const InteratomicModel& model, double r_nm);

}  // namespace casipol
