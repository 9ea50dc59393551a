#include "casipol/polarizability.hpp"

#include <stdexcept>

namespace casipol {

OscillatorModel::OscillatorModel(double alpha0_au, double omega0_ev)
    : alpha0_au_(alpha0_au), omega0_ev_(omega0_ev) {
    if (!(alpha0_au > 0.0))
        throw std::invalid_argument("OscillatorModel: alpha(0) must be > 0");
    if (!(omega0_ev > 0.0))
        throw std::invalid_argument("OscillatorModel: omega0 must be > 0");
}

double alpha_imag(const OscillatorModel& model, double xi_ev) {
    return model.alpha_au(xi_ev);
}

OscillatorModel preset(Species species) {
    switch (species) {
        case Species::HydrogenAtom: return OscillatorModel(4.50, 11.65);
        case Species::HydrogenMolecule: return OscillatorModel(5.439, 14.09);
    }
    throw std::invalid_argument("preset: unknown species");
}

OscillatorModel preset(std::string_view name) {
    if (name == "hydrogen-atom") return preset(Species::HydrogenAtom);
    if (name == "hydrogen-molecule") return preset(Species::HydrogenMolecule);
    throw std::invalid_argument("preset: unknown species '" + std::string(name) +
                                "' (available: hydrogen-atom, hydrogen-molecule)");
}

}  // namespace casipol
