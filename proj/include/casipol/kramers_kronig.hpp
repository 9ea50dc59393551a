#pragma once

#include "casipol/optical_table.hpp"

namespace casipol {

// How eps''(omega) is extended below the tabulated range.
enum class LowFreqExtrapolation {
    None,       // eps'' = 0 below the first point
    DrudeTail,  // eps'' = A/omega, A fitted to the lowest two points
    Constant,   // eps'' held at the lowest point down to low_cutoff_ev, 0 below
};

// How eps''(omega) is extended above the tabulated range.
enum class HighFreqExtrapolation {
    None,
    InverseCube,  // eps'' ~ omega^-3 matched at the highest point
};

struct ExtrapolationSpec {
    LowFreqExtrapolation low = LowFreqExtrapolation::None;
    double low_cutoff_ev = 1e-4;  // used by Constant only
    HighFreqExtrapolation high = HighFreqExtrapolation::None;
};

struct KkSettings {
    double rel_tol = 1e-6;  // per-piece quadrature tolerance
    int resolution = 1;     // base subdivisions per piece (doubling knob)
    int max_depth = 32;
};

// Dispersion relation on the imaginary axis:
//   eps(i xi) = 1 + (2/pi) * integral_0^inf omega eps''(omega) / (omega^2 + xi^2) domega
// with eps'' = 2nk interpolated piecewise power-law (log-log linear) inside
// the table and extended per `extrap` outside. xi in eV.
//
// xi = 0 returns the zero-frequency limit, which is +inf for a DrudeTail
// extension with nonzero amplitude. Throws std::invalid_argument for xi < 0.
double kramers_kronig(const OpticalAxisTable& table, double xi_ev,
                      const ExtrapolationSpec& extrap = {},
                      const KkSettings& settings = {});

}  // namespace casipol
