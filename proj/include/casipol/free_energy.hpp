#pragma once

#include <stdexcept>
#include <variant>

#include "casipol/permittivity.hpp"
#include "casipol/polarizability.hpp"
#include "casipol/reflection.hpp"
#include "casipol/thermal.hpp"

namespace casipol {

struct PlateGeometry {
    double thickness_nm;  // > 0
};

struct SemispaceGeometry {};

// Cylindrical shell: external radius R, internal radius R0, wall
// thickness d = R - R0. Length is treated as infinite (R << L).
class CylinderGeometry {
  public:
    CylinderGeometry(double outer_radius_nm, double inner_radius_nm)
        : outer_nm_(outer_radius_nm), inner_nm_(inner_radius_nm) {
        if (!(inner_radius_nm > 0.0) || !(outer_radius_nm > inner_radius_nm))
            throw std::invalid_argument("CylinderGeometry: need 0 < R0 < R");
    }
    double outer_radius_nm() const { return outer_nm_; }
    double inner_radius_nm() const { return inner_nm_; }
    double thickness_nm() const { return outer_nm_ - inner_nm_; }
    // Proximity-force validity domain of the exterior formula.
    bool pfa_valid(double separation_nm) const { return separation_nm <= 0.5 * outer_nm_; }

  private:
    double outer_nm_;
    double inner_nm_;
};

using BodyGeometry = std::variant<PlateGeometry, SemispaceGeometry, CylinderGeometry>;

// Handling of the l = 0 term of the Matsubara sum.
enum class ZeroFrequencyMode {
    // Literal 2 alpha(0) static term (exact when sqrt(eps_x eps_z) diverges
    // at zero frequency, e.g. a conducting in-plane response).
    PaperMetallic,
    // Half the l -> 0 limit of the general summand, with reflection
    // coefficients built from eps(i 0+).
    Generic,
};

struct SummationSettings {
    double term_rel_tol = 1e-9;  // in (0, 1e-3]
    long l_max_cap = 1'000'000;  // >= 10
    ZeroFrequencyMode zero_frequency_mode = ZeroFrequencyMode::PaperMetallic;
};

struct QuadratureSettings {
    double rel_tol = 1e-8;  // in (0, 1e-4]
    int max_refinements = 6;
};

struct FreeEnergySettings {
    SummationSettings summation;
    QuadratureSettings quadrature;
    // Worker threads for batch term evaluation; 0 = hardware concurrency.
    // The reduction order is fixed, so results are identical for any count.
    int workers = 0;
};

struct FreeEnergyResult {
    double value_ev = 0.0;               // negative for attraction
    long terms_used = 0;                 // Matsubara terms beyond l = 0
    double truncation_estimate_ev = 0.0; // estimated magnitude of the dropped tail
    int quadrature_refinements = 0;      // max node doublings used by any term
    bool sum_converged = false;
    bool quadrature_converged = false;
    bool converged() const { return sum_converged && quadrature_converged; }
};

// Plate integrand of the Matsubara sum: e^{-y} [(2y^2 - zeta^2) r_par + zeta^2 r_perp].
double integrand_plate(const UniaxialLayer& layer, double zeta, double y);

// Cylinder integrand: y e^{-y} [y - a/(2(R+a))] [(2 - zeta^2/y^2) r_par + (zeta^2/y^2) r_perp],
// with c0 = a/(2(R+a)). Requires y > 0.
double integrand_cylinder(const UniaxialLayer& layer, double zeta, double y, double c0);

// Casimir-Polder free energy of a particle facing a uniaxial plate of
// finite thickness, its semispace limit, and a cylindrical shell.
// Values in eV. The cylinder operation enforces the proximity-force
// validity domain a <= R/2 unless allow_outside_pfa is set.
FreeEnergyResult free_energy_plate(const ThermalGeometry& geom,
                                   const PermittivityModel& material,
                                   double thickness_nm,
                                   const OscillatorModel& particle,
                                   const FreeEnergySettings& settings = {});

FreeEnergyResult free_energy_semispace(const ThermalGeometry& geom,
                                       const PermittivityModel& material,
                                       const OscillatorModel& particle,
                                       const FreeEnergySettings& settings = {});

FreeEnergyResult free_energy_cylinder(const ThermalGeometry& geom,
                                      const CylinderGeometry& shell,
                                      const PermittivityModel& material,
                                      const OscillatorModel& particle,
                                      const FreeEnergySettings& settings = {},
                                      bool allow_outside_pfa = false);

FreeEnergyResult free_energy(const ThermalGeometry& geom, const BodyGeometry& body,
                             const PermittivityModel& material,
                             const OscillatorModel& particle,
                             const FreeEnergySettings& settings = {},
                             bool allow_outside_pfa = false);

}  // namespace casipol
