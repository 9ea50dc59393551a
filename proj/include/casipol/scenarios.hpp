#pragma once

#include <string>
#include <vector>

#include "casipol/additive_vdw.hpp"
#include "casipol/free_energy.hpp"

namespace casipol {

// A one-variable sweep: count points between min and max, linear or log
// spaced, ascending.
struct SweepSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    bool log_spacing = false;

    std::vector<double> points() const;  // validates and materializes
};

// Plot-ready numeric table: column names, units, rows. The last column of
// every scenario is a 0/1 convergence flag.
struct ScenarioTable {
    std::vector<std::string> columns;
    std::vector<std::string> units;
    std::vector<std::vector<double>> rows;
    bool all_converged = true;
};

struct NamedParticle {
    std::string name;
    OscillatorModel model;
};

// Free energy vs separation from a semispace, one column per particle.
ScenarioTable sweep_semispace(const SweepSpec& separations,
                              const std::vector<NamedParticle>& particles,
                              const PermittivityModel& material, double temperature_k,
                              const FreeEnergySettings& settings = {});

enum class ThicknessMode { FixedInnerRadius, FixedOuterRadius };

// Exterior (Lifshitz shell) vs interior (additive) free energies of a
// particle at separation a from the facing surface, swept over the wall
// thickness. The additive model is calibrated against the semispace
// result at a_ref_nm.
ScenarioTable compare_inside_outside(double a_nm, const SweepSpec& thicknesses,
                                     ThicknessMode mode, double fixed_radius_nm,
                                     const PermittivityModel& material,
                                     const OscillatorModel& particle,
                                     double temperature_k, double a_ref_nm,
                                     const FreeEnergySettings& settings = {},
                                     double annulus_rel_tol = 1e-7);

struct RegionMapSpec {
    SweepSpec separations;                 // a-range, nm
    double dominance_factor = 10.0;        // kappa > 1
    double shell_outer_radius_nm = 50.0;
    double shell_thickness_nm = 30.0;
    double r_tolerance_nm = 1e-6;          // bisection tolerance
    double r_min_nm = 0.1;
    double r_max_nm = 1000.0;
};

// For each a: the pair separations r where the interatomic energy
// magnitude equals |F^c|/kappa (line 1), |F^c| (equality) and
// kappa |F^c| (line 2), found by bisection in log r.
ScenarioTable region_boundaries(const RegionMapSpec& spec,
                                const PermittivityModel& material,
                                const OscillatorModel& particle, double temperature_k,
                                const FreeEnergySettings& settings = {});

}  // namespace casipol
