#include "casipol/thermal.hpp"

#include <numbers>
#include <stdexcept>

namespace casipol {

double matsubara_zeta(long l, const ThermalGeometry& geom) {
    if (l < 0)
        throw std::invalid_argument("matsubara_zeta: index must be >= 0");
    return 4.0 * std::numbers::pi * constants.boltzmann_ev_per_k *
           static_cast<double>(l) * geom.temperature_k() * geom.separation_nm() /
           constants.hbar_c_ev_nm;
}

}  // namespace casipol
