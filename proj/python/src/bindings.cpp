#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "casipol/additive_vdw.hpp"
#include "casipol/free_energy.hpp"
#include "casipol/kramers_kronig.hpp"
#include "casipol/scenarios.hpp"
#include "casipol/version.hpp"

namespace py = pybind11;
using namespace casipol;

namespace {

ExtrapolationSpec make_extrap(const std::string& low, double low_cutoff_ev,
                              const std::string& high) {
    ExtrapolationSpec e;
    if (low == "none") e.low = LowFreqExtrapolation::None;
    else if (low == "drude-tail") e.low = LowFreqExtrapolation::DrudeTail;
    else if (low == "constant") e.low = LowFreqExtrapolation::Constant;
    else throw std::invalid_argument("low extrapolation: none, drude-tail or constant");
    e.low_cutoff_ev = low_cutoff_ev;
    if (high == "none") e.high = HighFreqExtrapolation::None;
    else if (high == "inverse-cube") e.high = HighFreqExtrapolation::InverseCube;
    else throw std::invalid_argument("high extrapolation: none or inverse-cube");
    return e;
}

FreeEnergySettings make_settings(double term_rel_tol, long l_max_cap,
                                 const std::string& zero_mode, double quad_rel_tol,
                                 int workers) {
    FreeEnergySettings s;
    s.summation.term_rel_tol = term_rel_tol;
    s.summation.l_max_cap = l_max_cap;
    if (zero_mode == "paper-metallic")
        s.summation.zero_frequency_mode = ZeroFrequencyMode::PaperMetallic;
    else if (zero_mode == "generic")
        s.summation.zero_frequency_mode = ZeroFrequencyMode::Generic;
    else
        throw std::invalid_argument("zero_mode: paper-metallic or generic");
    s.quadrature.rel_tol = quad_rel_tol;
    s.workers = workers;
    return s;
}

py::dict table_to_dict(const ScenarioTable& t) {
    py::dict d;
    d["columns"] = t.columns;
    d["units"] = t.units;
    d["rows"] = t.rows;
    d["all_converged"] = t.all_converged;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Thermal Casimir-Polder free energies for uniaxial plates, semispaces "
              "and cylindrical shells";
    m.attr("__version__") = version;
    m.attr("BOLTZMANN_EV_PER_K") = constants.boltzmann_ev_per_k;
    m.attr("HBAR_C_EV_NM") = constants.hbar_c_ev_nm;
    m.attr("POLARIZABILITY_AU_NM3") = constants.polarizability_au_nm3;

    py::class_<ThermalGeometry>(m, "ThermalGeometry")
        .def(py::init<double, double>(), py::arg("temperature_k"),
             py::arg("separation_nm"))
        .def_property_readonly("temperature_k", &ThermalGeometry::temperature_k)
        .def_property_readonly("separation_nm", &ThermalGeometry::separation_nm)
        .def_property_readonly("hbar_omega_c_ev", &ThermalGeometry::hbar_omega_c_ev);

    m.def("matsubara_zeta", &matsubara_zeta, py::arg("l"), py::arg("geometry"),
          "Dimensionless Matsubara frequency zeta_l = 4 pi k_B l T a / (hbar c)");

    py::class_<OscillatorModel>(m, "OscillatorModel")
        .def(py::init<double, double>(), py::arg("alpha0_au"), py::arg("omega0_ev"))
        .def_property_readonly("alpha0_au", &OscillatorModel::alpha0_au)
        .def_property_readonly("omega0_ev", &OscillatorModel::omega0_ev)
        .def("alpha_au", &OscillatorModel::alpha_au, py::arg("xi_ev"))
        .def("alpha_nm3", &OscillatorModel::alpha_nm3, py::arg("xi_ev"));

    m.def("preset", [](const std::string& name) { return preset(std::string_view(name)); },
          py::arg("species"),
          "Oscillator presets: 'hydrogen-atom' or 'hydrogen-molecule'");

    py::class_<PermittivityModel>(m, "PermittivityModel")
        .def("eps_x", &PermittivityModel::eps_x, py::arg("xi_ev"))
        .def("eps_z", &PermittivityModel::eps_z, py::arg("xi_ev"))
        .def_property_readonly("description", &PermittivityModel::description);

    m.def("constant_material", &PermittivityModel::constant, py::arg("eps_x"),
          py::arg("eps_z"));
    m.def(
        "drude_lorentz_material",
        [](double x_wp, double x_gamma, double z_wp, double z_w0, double z_gamma) {
            return build_permittivity(AxisResponse::drude(x_wp, x_gamma),
                                      AxisResponse::lorentz(z_wp, z_w0, z_gamma),
                                      PermittivityModel::Provenance::Mixed,
                                      "drude-lorentz");
        },
        py::arg("x_plasma_ev"), py::arg("x_gamma_ev"), py::arg("z_plasma_ev"),
        py::arg("z_resonance_ev"), py::arg("z_gamma_ev"),
        "Analytic uniaxial material: Drude in-plane, Lorentz out-of-plane");
    m.def(
        "material_from_tables",
        [](const std::string& x_path, const std::string& z_path,
           const std::string& x_low, const std::string& z_low, double low_cutoff_ev,
           const std::string& high, int cache_points_per_decade) {
            OpticalDataTable t = load_optical_table_files(x_path, z_path);
            CacheSettings cache;
            cache.points_per_decade = cache_points_per_decade;
            return build_permittivity(t, make_extrap(x_low, low_cutoff_ev, high),
                                      make_extrap(z_low, low_cutoff_ev, high), {}, cache);
        },
        py::arg("x_path"), py::arg("z_path"), py::arg("x_low") = "drude-tail",
        py::arg("z_low") = "constant", py::arg("low_cutoff_ev") = 1e-4,
        py::arg("high") = "inverse-cube", py::arg("cache_points_per_decade") = 128,
        "Material from two-axis optical tables via the dispersion relation");

    m.def(
        "kk_transform",
        [](const std::string& path, double xi_ev, const std::string& low,
           double low_cutoff_ev, const std::string& high) {
            OpticalAxisTable t = load_optical_axis_file(path);
            return kramers_kronig(t, xi_ev, make_extrap(low, low_cutoff_ev, high));
        },
        py::arg("table_path"), py::arg("xi_ev"), py::arg("low") = "none",
        py::arg("low_cutoff_ev") = 1e-4, py::arg("high") = "none",
        "eps(i xi) of a single-axis optical table");

    py::class_<CylinderGeometry>(m, "CylinderGeometry")
        .def(py::init<double, double>(), py::arg("outer_radius_nm"),
             py::arg("inner_radius_nm"))
        .def_property_readonly("outer_radius_nm", &CylinderGeometry::outer_radius_nm)
        .def_property_readonly("inner_radius_nm", &CylinderGeometry::inner_radius_nm)
        .def_property_readonly("thickness_nm", &CylinderGeometry::thickness_nm);

    py::class_<FreeEnergyResult>(m, "FreeEnergyResult")
        .def_readonly("value_ev", &FreeEnergyResult::value_ev)
        .def_readonly("terms_used", &FreeEnergyResult::terms_used)
        .def_readonly("truncation_estimate_ev", &FreeEnergyResult::truncation_estimate_ev)
        .def_readonly("quadrature_refinements", &FreeEnergyResult::quadrature_refinements)
        .def_property_readonly("converged", &FreeEnergyResult::converged)
        .def("__repr__", [](const FreeEnergyResult& r) {
            std::ostringstream os;
            os << "FreeEnergyResult(value_ev=" << r.value_ev
               << ", terms_used=" << r.terms_used
               << ", converged=" << (r.converged() ? "True" : "False") << ")";
            return os.str();
        });

    const char* settings_doc = "term_rel_tol/l_max_cap control the Matsubara tail, "
                               "zero_mode is 'paper-metallic' or 'generic'";
    m.def(
        "free_energy_semispace",
        [](const ThermalGeometry& g, const PermittivityModel& m_, const OscillatorModel& p,
           double term_rel_tol, long l_max_cap, const std::string& zero_mode,
           double quad_rel_tol, int workers) {
            return free_energy_semispace(
                g, m_, p,
                make_settings(term_rel_tol, l_max_cap, zero_mode, quad_rel_tol, workers));
        },
        py::arg("geometry"), py::arg("material"), py::arg("particle"),
        py::arg("term_rel_tol") = 1e-9, py::arg("l_max_cap") = 1000000L,
        py::arg("zero_mode") = "paper-metallic", py::arg("quad_rel_tol") = 1e-8,
        py::arg("workers") = 0, settings_doc);
    m.def(
        "free_energy_plate",
        [](const ThermalGeometry& g, const PermittivityModel& m_, double thickness_nm,
           const OscillatorModel& p, double term_rel_tol, long l_max_cap,
           const std::string& zero_mode, double quad_rel_tol, int workers) {
            return free_energy_plate(
                g, m_, thickness_nm, p,
                make_settings(term_rel_tol, l_max_cap, zero_mode, quad_rel_tol, workers));
        },
        py::arg("geometry"), py::arg("material"), py::arg("thickness_nm"),
        py::arg("particle"), py::arg("term_rel_tol") = 1e-9,
        py::arg("l_max_cap") = 1000000L, py::arg("zero_mode") = "paper-metallic",
        py::arg("quad_rel_tol") = 1e-8, py::arg("workers") = 0, settings_doc);
    m.def(
        "free_energy_cylinder",
        [](const ThermalGeometry& g, const CylinderGeometry& shell,
           const PermittivityModel& m_, const OscillatorModel& p, bool allow_outside_pfa,
           double term_rel_tol, long l_max_cap, const std::string& zero_mode,
           double quad_rel_tol, int workers) {
            return free_energy_cylinder(
                g, shell, m_, p,
                make_settings(term_rel_tol, l_max_cap, zero_mode, quad_rel_tol, workers),
                allow_outside_pfa);
        },
        py::arg("geometry"), py::arg("shell"), py::arg("material"), py::arg("particle"),
        py::arg("allow_outside_pfa") = false, py::arg("term_rel_tol") = 1e-9,
        py::arg("l_max_cap") = 1000000L, py::arg("zero_mode") = "paper-metallic",
        py::arg("quad_rel_tol") = 1e-8, py::arg("workers") = 0, settings_doc);

    py::class_<AdditiveModel>(m, "AdditiveModel")
        .def_readonly("strength_k_ev_nm3", &AdditiveModel::strength_k_ev_nm3)
        .def_readonly("reference_separation_nm", &AdditiveModel::reference_separation_nm)
        .def_readonly("lifshitz_reference_ev", &AdditiveModel::lifshitz_reference_ev);

    m.def(
        "calibrate_additive",
        [](const PermittivityModel& m_, const OscillatorModel& p, double a_ref_nm,
           double temperature_k) { return calibrate(m_, p, a_ref_nm, temperature_k); },
        py::arg("material"), py::arg("particle"), py::arg("a_ref_nm") = 3.0,
        py::arg("temperature_k") = 300.0,
        "Additive wall model normalized to the Lifshitz semispace value at a_ref");
    m.def("additive_semispace_energy", &additive_semispace_energy, py::arg("model"),
          py::arg("a_nm"));
    m.def("interior_energy", &interior_energy, py::arg("model"), py::arg("shell"),
          py::arg("a_nm"), py::arg("rel_tol") = 1e-7,
          "Additive energy of a particle inside the shell, a from the inner surface");
    m.def(
        "interatomic_energy",
        [](const OscillatorModel& p, double r_nm) {
            return interatomic_energy(InteratomicModel::from_oscillator(p), r_nm);
        },
        py::arg("particle"), py::arg("r_nm"),
        "London pair energy -C6/r^6 of two identical particles");
    m.def(
        "c6_coefficient",
        [](const OscillatorModel& p) {
            return InteratomicModel::from_oscillator(p).c6_ev_nm6;
        },
        py::arg("particle"), "C6 = (3/4) omega0 alpha(0)^2 in eV nm^6");

    m.def(
        "sweep_semispace",
        [](double a_min, double a_max, int count, bool log_spacing,
           const std::vector<std::string>& species, const PermittivityModel& m_,
           double temperature_k) {
            std::vector<NamedParticle> particles;
            for (const auto& s : species) {
                std::string col = s;
                for (char& ch : col)
                    if (ch == '-') ch = '_';
                particles.push_back({col, preset(std::string_view(s))});
            }
            return table_to_dict(sweep_semispace(SweepSpec{a_min, a_max, count, log_spacing},
                                                 particles, m_, temperature_k));
        },
        py::arg("a_min"), py::arg("a_max"), py::arg("count"), py::arg("log_spacing"),
        py::arg("species"), py::arg("material"), py::arg("temperature_k") = 300.0);
    m.def(
        "compare_inside_outside",
        [](double a_nm, double d_min, double d_max, int count, const std::string& mode,
           double fixed_radius_nm, const PermittivityModel& m_, const OscillatorModel& p,
           double temperature_k, double a_ref_nm) {
            ThicknessMode tm;
            if (mode == "fixed-R0") tm = ThicknessMode::FixedInnerRadius;
            else if (mode == "fixed-R") tm = ThicknessMode::FixedOuterRadius;
            else throw std::invalid_argument("mode: fixed-R0 or fixed-R");
            return table_to_dict(compare_inside_outside(
                a_nm, SweepSpec{d_min, d_max, count, false}, tm, fixed_radius_nm, m_, p,
                temperature_k, a_ref_nm));
        },
        py::arg("a_nm"), py::arg("d_min"), py::arg("d_max"), py::arg("count"),
        py::arg("mode"), py::arg("fixed_radius_nm"), py::arg("material"),
        py::arg("particle"), py::arg("temperature_k") = 300.0, py::arg("a_ref_nm") = 3.0);
    m.def(
        "region_boundaries",
        [](double a_min, double a_max, int count, const PermittivityModel& m_,
           const OscillatorModel& p, double kappa, double outer_radius_nm,
           double thickness_nm, double temperature_k) {
            RegionMapSpec spec;
            spec.separations = SweepSpec{a_min, a_max, count, true};
            spec.dominance_factor = kappa;
            spec.shell_outer_radius_nm = outer_radius_nm;
            spec.shell_thickness_nm = thickness_nm;
            return table_to_dict(region_boundaries(spec, m_, p, temperature_k));
        },
        py::arg("a_min"), py::arg("a_max"), py::arg("count"), py::arg("material"),
        py::arg("particle"), py::arg("kappa") = 10.0, py::arg("outer_radius_nm") = 50.0,
        py::arg("thickness_nm") = 30.0, py::arg("temperature_k") = 300.0);
}
