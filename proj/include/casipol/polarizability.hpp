#pragma once

#include <string>
#include <string_view>

#include "casipol/constants.hpp"

namespace casipol {

// Single-oscillator dynamic polarizability
//   alpha(i xi) = g / (omega0^2 + xi^2),  g = alpha(0) omega0^2.
// alpha(0) in atomic units, omega0 in eV. Immutable.
class OscillatorModel {
  public:
    OscillatorModel(double alpha0_au, double omega0_ev);

    double alpha0_au() const { return alpha0_au_; }
    double omega0_ev() const { return omega0_ev_; }
    // g = alpha(0) omega0^2 in a.u. * eV^2.
    double strength_au_ev2() const { return alpha0_au_ * omega0_ev_ * omega0_ev_; }

    double alpha_au(double xi_ev) const {
        return strength_au_ev2() / (omega0_ev_ * omega0_ev_ + xi_ev * xi_ev);
    }
    double alpha_nm3(double xi_ev) const {
        return alpha_au(xi_ev) * constants.polarizability_au_nm3;
    }

  private:
    double alpha0_au_;
    double omega0_ev_;
};

// alpha(i xi) in atomic units; free-function form of the operation.
double alpha_imag(const OscillatorModel& model, double xi_ev);

enum class Species { HydrogenAtom, HydrogenMolecule };

// Presets: hydrogen atom (4.50 a.u., 11.65 eV), hydrogen molecule
// (5.439 a.u., 14.09 eV).
OscillatorModel preset(Species species);
// Name-based lookup ("hydrogen-atom", "hydrogen-molecule"); throws
// std::invalid_argument listing the available presets otherwise.
OscillatorModel preset(std::string_view name);

}  // namespace casipol
