#include "casipol/scenarios.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace casipol {

std::vector<double> SweepSpec::points() const {
    if (count < 2) throw std::invalid_argument("SweepSpec: count must be >= 2");
    if (!(min < max)) throw std::invalid_argument("SweepSpec: need min < max");
    if (log_spacing && !(min > 0.0))
        throw std::invalid_argument("SweepSpec: log spacing needs min > 0");
    std::vector<double> pts(count);
    if (log_spacing) {
        double la = std::log(min), lb = std::log(max);
        for (int i = 0; i < count; ++i)
            pts[i] = std::exp(la + (lb - la) * i / (count - 1));
    } else {
        for (int i = 0; i < count; ++i)
            pts[i] = min + (max - min) * i / (count - 1);
    }
    pts.front() = min;
    pts.back() = max;
    return pts;
}

ScenarioTable sweep_semispace(const SweepSpec& separations,
                              const std::vector<NamedParticle>& particles,
                              const PermittivityModel& material, double temperature_k,
                              const FreeEnergySettings& settings) {
    if (particles.empty())
        throw std::invalid_argument("sweep_semispace: needs at least one particle");
    ScenarioTable table;
    table.columns.push_back("a_nm");
    table.units.push_back("nm");
    for (const auto& p : particles) {
        table.columns.push_back("F_" + p.name + "_eV");
        table.units.push_back("eV");
    }
    table.columns.push_back("converged");
    table.units.push_back("flag");

    for (double a : separations.points()) {
        ThermalGeometry geom(temperature_k, a);
        std::vector<double> row{a};
        bool ok = true;
        for (const auto& p : particles) {
            FreeEnergyResult r = free_energy_semispace(geom, material, p.model, settings);
            row.push_back(r.value_ev);
            ok = ok && r.converged();
        }
        row.push_back(ok ? 1.0 : 0.0);
        table.all_converged = table.all_converged && ok;
        table.rows.push_back(std::move(row));
    }
    return table;
}

ScenarioTable compare_inside_outside(double a_nm, const SweepSpec& thicknesses,
                                     ThicknessMode mode, double fixed_radius_nm,
                                     const PermittivityModel& material,
                                     const OscillatorModel& particle,
                                     double temperature_k, double a_ref_nm,
                                     const FreeEnergySettings& settings,
                                     double annulus_rel_tol) {
    AdditiveModel additive =
        calibrate(material, particle, a_ref_nm, temperature_k, settings);
    ThermalGeometry geom(temperature_k, a_nm);

    ScenarioTable table;
    table.columns = {"d_nm", "F_ext_eV", "F_int_eV", "difference_eV", "converged"};
    table.units = {"nm", "eV", "eV", "eV", "flag"};

    for (double d : thicknesses.points()) {
        CylinderGeometry shell =
            mode == ThicknessMode::FixedInnerRadius
                ? CylinderGeometry(fixed_radius_nm + d, fixed_radius_nm)
                : CylinderGeometry(fixed_radius_nm, fixed_radius_nm - d);
        FreeEnergyResult ext =
            free_energy_cylinder(geom, shell, material, particle, settings);
        double interior = interior_energy(additive, shell, a_nm, annulus_rel_tol);
        bool ok = ext.converged();
        table.rows.push_back({d, ext.value_ev, interior, ext.value_ev - interior,
                              ok ? 1.0 : 0.0});
        table.all_converged = table.all_converged && ok;
    }
    return table;
}

namespace {

// Solves |E_HH(r)| = target for the strictly decreasing magnitude of the
// r^-6 pair energy, bisecting in log r.
double solve_pair_separation(const InteratomicModel& pair, double target,
                             double r_min, double r_max, double r_tol, double a_nm) {
    auto magnitude = [&](double r) { return std::abs(interatomic_energy(pair, r)); };
    if (magnitude(r_min) < target || magnitude(r_max) > target) {
        std::ostringstream os;
        os << "region_boundaries: no bracket in [" << r_min << ", " << r_max
           << "] nm for a = " << a_nm << " nm";
        throw std::runtime_error(os.str());
    }
    double lo = std::log(r_min), hi = std::log(r_max);
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (magnitude(std::exp(mid)) > target)
            lo = mid;
        else
            hi = mid;
        if (std::exp(hi) - std::exp(lo) < r_tol) break;
    }
    return std::exp(0.5 * (lo + hi));
}

}  // namespace

ScenarioTable region_boundaries(const RegionMapSpec& spec,
                                const PermittivityModel& material,
                                const OscillatorModel& particle, double temperature_k,
                                const FreeEnergySettings& settings) {
    if (!(spec.dominance_factor >= 1.0))
        throw std::invalid_argument("region_boundaries: dominance factor must be >= 1");
    CylinderGeometry shell(spec.shell_outer_radius_nm,
                           spec.shell_outer_radius_nm - spec.shell_thickness_nm);
    InteratomicModel pair = InteratomicModel::from_oscillator(particle);

    ScenarioTable table;
    table.columns = {"a_nm", "r_line1_nm", "r_equal_nm", "r_line2_nm", "converged"};
    table.units = {"nm", "nm", "nm", "nm", "flag"};

    for (double a : spec.separations.points()) {
        ThermalGeometry geom(temperature_k, a);
        FreeEnergyResult fc =
            free_energy_cylinder(geom, shell, material, particle, settings);
        double mag = std::abs(fc.value_ev);
        double r1 = solve_pair_separation(pair, mag / spec.dominance_factor,
                                          spec.r_min_nm, spec.r_max_nm,
                                          spec.r_tolerance_nm, a);
        double re = solve_pair_separation(pair, mag, spec.r_min_nm, spec.r_max_nm,
                                          spec.r_tolerance_nm, a);
        double r2 = solve_pair_separation(pair, mag * spec.dominance_factor,
                                          spec.r_min_nm, spec.r_max_nm,
                                          spec.r_tolerance_nm, a);
        bool ok = fc.converged();
        table.rows.push_back({a, r1, re, r2, ok ? 1.0 : 0.0});
        table.all_converged = table.all_converged && ok;
    }
    return table;
}

}  // namespace casipol
