#pragma once

namespace casipol {

// Fundamental constants in the internal unit system (lengths in nm,
// energies in eV, temperatures in K). CODATA 2018 values.
struct PhysicalConstants {
    // Boltzmann constant, eV/K (exact since the 2019 SI redefinition).
    double boltzmann_ev_per_k;
    // hbar*c, eV*nm.
    double hbar_c_ev_nm;
    // hbar, eV*s (for rad/s conversions only).
    double hbar_ev_s;
    // 1 atomic unit of polarizability = 1.482e-31 m^3, expressed in nm^3.
    double polarizability_au_nm3;
};

inline constexpr PhysicalConstants constants{
    8.617333262e-5,   // k_B      [eV/K]
    197.3269804,      // hbar*c   [eV nm]
    6.582119569e-16,  // hbar     [eV s]
    1.482e-4,         // 1 a.u. of polarizability [nm^3]
};

}  // namespace casipol
