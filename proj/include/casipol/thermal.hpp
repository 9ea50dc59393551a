#pragma once

#include <stdexcept>

#include "casipol/constants.hpp"

namespace casipol {

// Thermal state of an atom-body configuration: temperature and
// atom-surface separation. Immutable after construction.
class ThermalGeometry {
  public:
    ThermalGeometry(double temperature_k, double separation_nm)
        : temperature_k_(temperature_k), separation_nm_(separation_nm) {
        if (!(temperature_k > 0.0))
            throw std::invalid_argument("ThermalGeometry: temperature must be > 0 K");
        if (!(separation_nm > 0.0))
            throw std::invalid_argument("ThermalGeometry: separation must be > 0 nm");
    }

    double temperature_k() const { return temperature_k_; }
    double separation_nm() const { return separation_nm_; }

    // Characteristic frequency omega_c = c/(2a), as an energy hbar*omega_c in eV.
    double hbar_omega_c_ev() const {
        return constants.hbar_c_ev_nm / (2.0 * separation_nm_);
    }

    // Same frequency in rad/s.
    double omega_c_rad_per_s() const {
        return hbar_omega_c_ev() / constants.hbar_ev_s;
    }

    // Thermal energy k_B*T in eV.
    double thermal_energy_ev() const {
        return constants.boltzmann_ev_per_k * temperature_k_;
    }

  private:
    double temperature_k_;
    double separation_nm_;
};

// Dimensionless Matsubara frequency zeta_l = 4 pi k_B l T a / (hbar c).
double matsubara_zeta(long l, const ThermalGeometry& geom);

// The Matsubara grid of a thermal state: zeta_l and the dimensional
// xi_l = zeta_l * omega_c (in eV). zeta_0 = 0; zeta_l linear in l.
class MatsubaraGrid {
  public:
    explicit MatsubaraGrid(const ThermalGeometry& geom)
        : geom_(geom), zeta1_(matsubara_zeta(1, geom)) {}

    double zeta(long l) const { return static_cast<double>(l) * zeta1_; }
    double xi_ev(long l) const { return zeta(l) * geom_.hbar_omega_c_ev(); }
    double zeta_step() const { return zeta1_; }
    const ThermalGeometry& geometry() const { return geom_; }

  private:
    ThermalGeometry geom_;
    double zeta1_;
};

}  // namespace casipol
