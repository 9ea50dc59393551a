// casipol command-line interface: single-point evaluations, the scenario
// sweeps, and the dispersion transform, with reproducible run manifests.

#include <clocale>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "casipol/additive_vdw.hpp"
#include "casipol/config.hpp"
#include "casipol/free_energy.hpp"
#include "casipol/scenarios.hpp"
#include "casipol/sha256.hpp"
#include "casipol/table_io.hpp"
#include "casipol/version.hpp"

namespace fs = std::filesystem;
using namespace casipol;

namespace {

constexpr double kEvTo1e20J = 16.02176634;  // 1 eV = 16.02176634 x 1e-20 J

// ---------------------------------------------------------------------
// grid specs of the form "log:min:max:count" / "lin:min:max:count"

SweepSpec parse_grid(const std::string& text, const char* what) {
    std::istringstream is(text);
    std::string kind, smin, smax, scount;
    if (!std::getline(is, kind, ':') || !std::getline(is, smin, ':') ||
        !std::getline(is, smax, ':') || !std::getline(is, scount))
        throw std::runtime_error(std::string(what) +
                                 ": expected '(log|lin):min:max:count', got '" + text + "'");
    SweepSpec spec;
    if (kind == "log")
        spec.log_spacing = true;
    else if (kind == "lin")
        spec.log_spacing = false;
    else
        throw std::runtime_error(std::string(what) + ": spacing must be log or lin");
    try {
        spec.min = std::stod(smin);
        spec.max = std::stod(smax);
        spec.count = std::stoi(scount);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string(what) + ": bad numbers in '" + text + "'");
    }
    return spec;
}

// ---------------------------------------------------------------------
// config resolution

// Rewrites a table path found in a config file so it is usable from any
// working directory.
std::string resolve_path(const std::string& path, const fs::path& base_dir) {
    fs::path p(path);
    if (p.is_absolute()) return p.lexically_normal().string();
    return (base_dir / p).lexically_normal().string();
}

void load_config_file(Config& into, const std::string& path) {
    Config file = Config::parse_file(path);
    fs::path base = fs::path(path).parent_path();
    for (const char* key : {"x_table", "z_table"}) {
        auto v = file.get("material", key);
        if (v) file.set("material", key, resolve_path(*v, base));
    }
    auto input = file.get("scenario", "input");
    if (input) file.set("scenario", "input", resolve_path(*input, base));
    into.merge_from(file);
}

LowFreqExtrapolation parse_low_extrap(const std::string& s) {
    if (s == "none") return LowFreqExtrapolation::None;
    if (s == "drude-tail") return LowFreqExtrapolation::DrudeTail;
    if (s == "constant") return LowFreqExtrapolation::Constant;
    throw std::runtime_error("unknown low extrapolation '" + s +
                             "' (none, drude-tail, constant)");
}

HighFreqExtrapolation parse_high_extrap(const std::string& s) {
    if (s == "none") return HighFreqExtrapolation::None;
    if (s == "inverse-cube") return HighFreqExtrapolation::InverseCube;
    throw std::runtime_error("unknown high extrapolation '" + s +
                             "' (none, inverse-cube)");
}

KkSettings kk_from_config(const Config& cfg) {
    KkSettings kk;
    kk.rel_tol = cfg.get_double("material", "kk_rel_tol", kk.rel_tol);
    kk.resolution = static_cast<int>(cfg.get_long("material", "kk_resolution", 1));
    return kk;
}

ExtrapolationSpec extrap_from_config(const Config& cfg, const std::string& axis) {
    ExtrapolationSpec e;
    std::string def = axis == "x" ? "drude-tail" : "constant";
    e.low = parse_low_extrap(cfg.get_or("material", axis + "_low_extrapolation", def));
    e.low_cutoff_ev = cfg.get_double("material", axis + "_low_cutoff_ev", 1e-4);
    e.high = parse_high_extrap(cfg.get_or("material", "high_extrapolation", "inverse-cube"));
    return e;
}

struct MaterialBundle {
    PermittivityModel model;
    std::vector<std::pair<std::string, std::string>> input_digests;  // key, digest
};

AxisResponse axis_from_config(const Config& cfg, const std::string& axis,
                              const KkSettings& kk, const CacheSettings& cache,
                              std::vector<std::pair<std::string, std::string>>& digests) {
    std::string source = cfg.get_or("material", axis + "_source", "table");
    if (source == "table") {
        std::string path = cfg.require("material", axis + "_table");
        digests.emplace_back(axis + "_table_digest", sha256_file_hex(path));
        OpticalAxisTable table = load_optical_axis_file(path);
        return AxisResponse::from_table(table, extrap_from_config(cfg, axis), kk, cache);
    }
    if (source == "drude")
        return AxisResponse::drude(cfg.get_double("material", axis + "_wp_ev", 0.0),
                                   cfg.get_double("material", axis + "_gamma_ev", 0.0));
    if (source == "lorentz")
        return AxisResponse::lorentz(cfg.get_double("material", axis + "_wp_ev", 0.0),
                                     cfg.get_double("material", axis + "_w0_ev", 0.0),
                                     cfg.get_double("material", axis + "_gamma_ev", 0.0));
    if (source == "constant")
        return AxisResponse::constant(cfg.get_double("material", axis + "_epsilon", 1.0));
    throw std::runtime_error("unknown material source '" + source +
                             "' (table, drude, lorentz, constant)");
}

MaterialBundle material_from_config(const Config& cfg) {
    if (!cfg.has("material", "x_source") && !cfg.has("material", "x_table") &&
        !cfg.has("material", "name"))
        throw std::runtime_error(
            "no material configured (pass --material FILE or a [material] section)");
    KkSettings kk = kk_from_config(cfg);
    CacheSettings cache;
    cache.xi_min_ev = cfg.get_double("material", "cache_xi_min_ev", cache.xi_min_ev);
    cache.xi_max_ev = cfg.get_double("material", "cache_xi_max_ev", cache.xi_max_ev);
    cache.points_per_decade = static_cast<int>(
        cfg.get_long("material", "cache_points_per_decade", cache.points_per_decade));

    std::vector<std::pair<std::string, std::string>> digests;
    AxisResponse x = axis_from_config(cfg, "x", kk, cache, digests);
    AxisResponse z = axis_from_config(cfg, "z", kk, cache, digests);
    std::string desc = cfg.get_or("material", "name", "unnamed");
    PermittivityModel model = build_permittivity(
        x, z, PermittivityModel::Provenance::Mixed, desc + " x:" + x.describe() +
                                                        " z:" + z.describe());

    // a manifest being re-run must reference byte-identical inputs
    for (const auto& [key, digest] : digests) {
        auto recorded = cfg.get("inputs", key);
        if (recorded && *recorded != digest)
            throw std::runtime_error("input digest mismatch for " + key +
                                     ": table file changed since the manifest was written");
    }
    return {std::move(model), std::move(digests)};
}

OscillatorModel particle_from_config(const Config& cfg, const std::string& name) {
    if (name == "custom")
        return OscillatorModel(cfg.get_double("particle", "alpha0_au", 0.0),
                               cfg.get_double("particle", "omega0_ev", 0.0));
    return preset(std::string_view(name));
}

std::vector<NamedParticle> particles_from_config(const Config& cfg) {
    std::string list = cfg.get_or("particle", "species", "hydrogen-atom");
    std::vector<NamedParticle> out;
    std::istringstream is(list);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        std::string column = item;
        for (char& c : column)
            if (c == '-') c = '_';
        out.push_back({column, particle_from_config(cfg, item)});
    }
    if (out.empty()) throw std::runtime_error("no particle species configured");
    return out;
}

FreeEnergySettings settings_from_config(const Config& cfg) {
    FreeEnergySettings s;
    s.summation.term_rel_tol =
        cfg.get_double("numerics", "term_rel_tol", s.summation.term_rel_tol);
    s.summation.l_max_cap = cfg.get_long("numerics", "l_max_cap", s.summation.l_max_cap);
    std::string mode = cfg.get_or("numerics", "zero_frequency_mode", "paper-metallic");
    if (mode == "paper-metallic")
        s.summation.zero_frequency_mode = ZeroFrequencyMode::PaperMetallic;
    else if (mode == "generic")
        s.summation.zero_frequency_mode = ZeroFrequencyMode::Generic;
    else
        throw std::runtime_error("unknown zero_frequency_mode '" + mode +
                                 "' (paper-metallic, generic)");
    s.quadrature.rel_tol = cfg.get_double("numerics", "quad_rel_tol", s.quadrature.rel_tol);
    s.quadrature.max_refinements = static_cast<int>(
        cfg.get_long("numerics", "quad_max_refinements", s.quadrature.max_refinements));
    if (const char* env = std::getenv("CASIPOL_WORKERS")) s.workers = std::atoi(env);
    return s;
}

// ---------------------------------------------------------------------
// output

void apply_unit(ScenarioTable& table, const std::string& unit) {
    if (unit == "eV") return;
    if (unit != "1e-20J")
        throw std::runtime_error("unknown output unit '" + unit + "' (eV, 1e-20J)");
    for (std::size_t c = 0; c < table.units.size(); ++c) {
        if (table.units[c] != "eV") continue;
        table.units[c] = "1e-20J";
        for (auto& row : table.rows) row[c] *= kEvTo1e20J;
    }
}

int emit(const std::string& subcommand, const Config& resolved, ScenarioTable table,
         const std::string& out_prefix) {
    Config manifest = resolved;
    manifest.set("run", "subcommand", subcommand);
    manifest.set("run", "version", version);
    std::string manifest_text = manifest.serialize();
    std::string digest = sha256_hex(manifest_text);

    apply_unit(table, resolved.get_or("output", "unit", "eV"));
    std::string table_text = render_table(table, subcommand, digest);

    std::string table_path = out_prefix + ".dat";
    std::string manifest_path = out_prefix + ".manifest";
    write_text_file(table_path, table_text);
    write_text_file(manifest_path, manifest_text);

    std::cout << "casipol " << subcommand << " (v" << version << ")\n"
              << "  rows:      " << table.rows.size() << "\n"
              << "  converged: " << (table.all_converged ? "yes" : "PARTIAL") << "\n"
              << "  table:     " << table_path << "\n"
              << "  manifest:  " << manifest_path << " (sha256:" << digest.substr(0, 12)
              << "...)\n";
    if (table.rows.size() == 1) {
        std::cout << "  row:      ";
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            std::cout << " " << table.columns[i] << "=" << format_number(table.rows[0][i]);
        std::cout << "\n";
    }
    return table.all_converged ? 0 : 2;
}

void record_inputs(Config& cfg, const MaterialBundle& mat) {
    for (const auto& [key, digest] : mat.input_digests) cfg.set("inputs", key, digest);
}

// ---------------------------------------------------------------------
// subcommand runners (config fully resolved at this point)

int run_point(Config cfg, const std::string& out) {
    MaterialBundle mat = material_from_config(cfg);
    record_inputs(cfg, mat);
    FreeEnergySettings settings = settings_from_config(cfg);
    double a = cfg.get_double("geometry", "a_nm", 3.0);
    double T = cfg.get_double("geometry", "T_K", 300.0);
    ThermalGeometry geom(T, a);
    auto particles = particles_from_config(cfg);
    if (particles.size() != 1)
        throw std::runtime_error("point: exactly one species expected");
    bool allow = cfg.get_or("geometry", "allow_outside_pfa", "0") == "1";

    std::string body = cfg.get_or("geometry", "body", "semispace");
    FreeEnergyResult r;
    if (body == "semispace") {
        r = free_energy_semispace(geom, mat.model, particles[0].model, settings);
    } else if (body == "plate") {
        r = free_energy_plate(geom, mat.model, cfg.get_double("geometry", "d_nm", 30.0),
                              particles[0].model, settings);
    } else if (body == "cylinder") {
        double R = cfg.get_double("geometry", "R_nm", 50.0);
        double R0 = cfg.has("geometry", "R0_nm")
                        ? cfg.get_double("geometry", "R0_nm", 0.0)
                        : R - cfg.get_double("geometry", "d_nm", 30.0);
        r = free_energy_cylinder(geom, CylinderGeometry(R, R0), mat.model,
                                 particles[0].model, settings, allow);
    } else {
        throw std::runtime_error("unknown body '" + body +
                                 "' (semispace, plate, cylinder)");
    }

    ScenarioTable t;
    t.columns = {"a_nm", "F_" + particles[0].name + "_eV", "terms_used",
                 "truncation_estimate_eV", "quadrature_refinements", "converged"};
    t.units = {"nm", "eV", "count", "eV", "count", "flag"};
    t.rows = {{a, r.value_ev, double(r.terms_used), r.truncation_estimate_ev,
               double(r.quadrature_refinements), r.converged() ? 1.0 : 0.0}};
    t.all_converged = r.converged();
    return emit("point", cfg, std::move(t), out);
}

int run_sweep(const std::string& sub, Config cfg, const std::string& out) {
    MaterialBundle mat = material_from_config(cfg);
    record_inputs(cfg, mat);
    FreeEnergySettings settings = settings_from_config(cfg);
    double T = cfg.get_double("geometry", "T_K", 300.0);
    SweepSpec a_grid =
        parse_grid(cfg.get_or("scenario", "a_grid", "log:1:200:60"), "a-grid");
    auto particles = particles_from_config(cfg);

    ScenarioTable t;
    if (sub == "semispace") {
        t = sweep_semispace(a_grid, particles, mat.model, T, settings);
    } else {
        // per-point bodies share the sweep loop
        t.columns.push_back("a_nm");
        t.units.push_back("nm");
        for (const auto& p : particles) {
            t.columns.push_back("F_" + p.name + "_eV");
            t.units.push_back("eV");
        }
        t.columns.push_back("converged");
        t.units.push_back("flag");
        bool allow = cfg.get_or("geometry", "allow_outside_pfa", "0") == "1";
        for (double a : a_grid.points()) {
            ThermalGeometry geom(T, a);
            std::vector<double> row{a};
            bool ok = true;
            for (const auto& p : particles) {
                FreeEnergyResult r;
                if (sub == "plate") {
                    r = free_energy_plate(geom, mat.model,
                                          cfg.get_double("geometry", "d_nm", 30.0),
                                          p.model, settings);
                } else {
                    double R = cfg.get_double("geometry", "R_nm", 50.0);
                    double R0 = cfg.has("geometry", "R0_nm")
                                    ? cfg.get_double("geometry", "R0_nm", 0.0)
                                    : R - cfg.get_double("geometry", "d_nm", 30.0);
                    r = free_energy_cylinder(geom, CylinderGeometry(R, R0), mat.model,
                                             p.model, settings, allow);
                }
                row.push_back(r.value_ev);
                ok = ok && r.converged();
            }
            row.push_back(ok ? 1.0 : 0.0);
            t.all_converged = t.all_converged && ok;
            t.rows.push_back(std::move(row));
        }
    }
    return emit(sub, cfg, std::move(t), out);
}

int run_compare(Config cfg, const std::string& out) {
    MaterialBundle mat = material_from_config(cfg);
    record_inputs(cfg, mat);
    FreeEnergySettings settings = settings_from_config(cfg);
    double T = cfg.get_double("geometry", "T_K", 300.0);
    double a = cfg.get_double("geometry", "a_nm", 3.0);
    SweepSpec d_grid =
        parse_grid(cfg.get_or("scenario", "d_grid", "lin:2:40:20"), "d-grid");
    std::string mode_name = cfg.get_or("scenario", "mode", "fixed-R0");
    ThicknessMode mode;
    double radius;
    if (mode_name == "fixed-R0") {
        mode = ThicknessMode::FixedInnerRadius;
        radius = cfg.get_double("geometry", "R0_nm", 10.0);
    } else if (mode_name == "fixed-R") {
        mode = ThicknessMode::FixedOuterRadius;
        radius = cfg.get_double("geometry", "R_nm", 50.0);
    } else {
        throw std::runtime_error("unknown mode '" + mode_name + "' (fixed-R0, fixed-R)");
    }
    double a_ref = cfg.get_double("scenario", "aref_nm", a);
    double annulus_tol = cfg.get_double("numerics", "annulus_rel_tol", 1e-7);
    auto particles = particles_from_config(cfg);
    if (particles.size() != 1)
        throw std::runtime_error("compare-inside-outside: exactly one species expected");

    ScenarioTable t = compare_inside_outside(a, d_grid, mode, radius, mat.model,
                                             particles[0].model, T, a_ref, settings,
                                             annulus_tol);
    return emit("compare-inside-outside", cfg, std::move(t), out);
}

int run_region_map(Config cfg, const std::string& out) {
    MaterialBundle mat = material_from_config(cfg);
    record_inputs(cfg, mat);
    FreeEnergySettings settings = settings_from_config(cfg);
    double T = cfg.get_double("geometry", "T_K", 300.0);
    RegionMapSpec spec;
    spec.separations =
        parse_grid(cfg.get_or("scenario", "a_grid", "log:1:25:25"), "a-grid");
    spec.dominance_factor = cfg.get_double("scenario", "kappa", 10.0);
    spec.shell_outer_radius_nm = cfg.get_double("geometry", "R_nm", 50.0);
    spec.shell_thickness_nm = cfg.get_double("geometry", "d_nm", 30.0);
    spec.r_tolerance_nm = cfg.get_double("scenario", "r_tol_nm", 1e-6);
    spec.r_min_nm = cfg.get_double("scenario", "r_min_nm", 0.1);
    spec.r_max_nm = cfg.get_double("scenario", "r_max_nm", 1000.0);
    auto particles = particles_from_config(cfg);
    if (particles.size() != 1)
        throw std::runtime_error("region-map: exactly one species expected");

    ScenarioTable t =
        region_boundaries(spec, mat.model, particles[0].model, T, settings);
    return emit("region-map", cfg, std::move(t), out);
}

int run_kk_transform(Config cfg, const std::string& out) {
    std::string input = cfg.require("scenario", "input");
    std::string digest = sha256_file_hex(input);
    auto recorded = cfg.get("inputs", "input_digest");
    if (recorded && *recorded != digest)
        throw std::runtime_error(
            "input digest mismatch: table file changed since the manifest was written");
    cfg.set("inputs", "input_digest", digest);

    OpticalAxisTable table = load_optical_axis_file(input);
    ExtrapolationSpec extrap;
    extrap.low = parse_low_extrap(cfg.get_or("scenario", "low_extrapolation", "none"));
    extrap.low_cutoff_ev = cfg.get_double("scenario", "low_cutoff_ev", 1e-4);
    extrap.high =
        parse_high_extrap(cfg.get_or("scenario", "high_extrapolation", "none"));
    KkSettings kk = kk_from_config(cfg);
    SweepSpec grid =
        parse_grid(cfg.get_or("scenario", "xi_grid", "log:0.01:100:50"), "xi-grid");

    ScenarioTable t;
    t.columns = {"xi_eV", "eps", "converged"};
    t.units = {"eV", "dimensionless", "flag"};
    for (double xi : grid.points())
        t.rows.push_back({xi, kramers_kronig(table, xi, extrap, kk), 1.0});
    return emit("kk-transform", cfg, std::move(t), out);
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"casipol: thermal Casimir-Polder free energies for uniaxial plates,\n"
                 "semispaces and cylindrical shells, with comparison scenarios"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("casipol ") + version);

    struct Common {
        std::string config_path, material_path, out_prefix;
        std::vector<std::pair<std::string, std::string>> overrides;  // (section.key, value)
    };

    auto add_common = [](CLI::App* sub, Common& c, const std::string& default_out) {
        sub->add_option("--config", c.config_path,
                        "full config file (a run manifest also works)");
        sub->add_option("--material", c.material_path,
                        "material config file ([material] section)");
        sub->add_option("--out", c.out_prefix, "output prefix for .dat/.manifest")
            ->capture_default_str()
            ->default_val(default_out);
    };

    // every value flag writes through to one [section] key
    auto add_override = [](CLI::App* sub, Common& c, const std::string& flag,
                           const std::string& section_key, const std::string& help) {
        sub->add_option_function<std::string>(
            flag,
            [&c, section_key](const std::string& v) {
                c.overrides.emplace_back(section_key, v);
            },
            help);
    };

    std::map<std::string, Common> commons;
    std::vector<std::string> subs = {"point",      "semispace",   "plate",
                                     "cylinder",   "compare-inside-outside",
                                     "region-map", "kk-transform"};
    std::map<std::string, CLI::App*> apps;
    for (const auto& name : subs) {
        std::string help;
        if (name == "point") help = "single free-energy evaluation for one body";
        else if (name == "semispace") help = "free energy vs separation from a semispace";
        else if (name == "plate") help = "free energy vs separation from a finite plate";
        else if (name == "cylinder") help = "free energy vs separation from a cylindrical shell";
        else if (name == "compare-inside-outside")
            help = "exterior (Lifshitz) vs interior (additive) shell energies vs thickness";
        else if (name == "region-map")
            help = "pair-separation contours where interatomic and shell energies compare";
        else help = "dispersion transform of an optical table onto the imaginary axis";
        CLI::App* sub = app.add_subcommand(name, help);
        Common& c = commons[name];
        add_common(sub, c, name);
        apps[name] = sub;

        if (name != "kk-transform") {
            add_override(sub, c, "--T-K", "geometry.T_K", "temperature [K] (default 300)");
            add_override(sub, c, "--species", "particle.species",
                         "species or comma list: hydrogen-atom, hydrogen-molecule, custom");
            add_override(sub, c, "--alpha0-au", "particle.alpha0_au",
                         "custom static polarizability [a.u.]");
            add_override(sub, c, "--omega0-ev", "particle.omega0_ev",
                         "custom characteristic energy [eV]");
            add_override(sub, c, "--term-rel-tol", "numerics.term_rel_tol",
                         "Matsubara tail tolerance (default 1e-9)");
            add_override(sub, c, "--l-max-cap", "numerics.l_max_cap",
                         "Matsubara term cap (default 1000000)");
            add_override(sub, c, "--quad-rel-tol", "numerics.quad_rel_tol",
                         "y-integration tolerance (default 1e-8)");
            add_override(sub, c, "--zero-mode", "numerics.zero_frequency_mode",
                         "zero-frequency term: paper-metallic (default) or generic");
        }
    }

    // geometry flags per subcommand
    add_override(apps["point"], commons["point"], "--body", "geometry.body",
                 "semispace (default), plate or cylinder");
    add_override(apps["point"], commons["point"], "--a-nm", "geometry.a_nm",
                 "separation [nm] (default 3)");
    add_override(apps["point"], commons["point"], "--d-nm", "geometry.d_nm",
                 "plate/shell thickness [nm] (default 30)");
    add_override(apps["point"], commons["point"], "--R-nm", "geometry.R_nm",
                 "shell external radius [nm] (default 50)");
    add_override(apps["point"], commons["point"], "--R0-nm", "geometry.R0_nm",
                 "shell internal radius [nm]");
    apps["point"]->add_flag_callback(
        "--allow-outside-pfa",
        [&]() { commons["point"].overrides.emplace_back("geometry.allow_outside_pfa", "1"); },
        "evaluate the shell formula beyond a <= R/2");

    for (const char* s : {"semispace", "plate", "cylinder"})
        add_override(apps[s], commons[s], "--a-grid", "scenario.a_grid",
                     "separation grid (log|lin):min:max:count (default log:1:200:60)");
    add_override(apps["plate"], commons["plate"], "--d-nm", "geometry.d_nm",
                 "plate thickness [nm] (default 30)");
    add_override(apps["cylinder"], commons["cylinder"], "--d-nm", "geometry.d_nm",
                 "shell thickness [nm] (default 30)");
    add_override(apps["cylinder"], commons["cylinder"], "--R-nm", "geometry.R_nm",
                 "shell external radius [nm] (default 50)");
    add_override(apps["cylinder"], commons["cylinder"], "--R0-nm", "geometry.R0_nm",
                 "shell internal radius [nm]");

    auto& cmp = commons["compare-inside-outside"];
    add_override(apps["compare-inside-outside"], cmp, "--a-nm", "geometry.a_nm",
                 "separation from the facing surface [nm] (default 3)");
    add_override(apps["compare-inside-outside"], cmp, "--d-grid", "scenario.d_grid",
                 "thickness grid (default lin:2:40:20)");
    add_override(apps["compare-inside-outside"], cmp, "--mode", "scenario.mode",
                 "fixed-R0 (default) or fixed-R");
    add_override(apps["compare-inside-outside"], cmp, "--R0-nm", "geometry.R0_nm",
                 "internal radius for fixed-R0 [nm] (default 10)");
    add_override(apps["compare-inside-outside"], cmp, "--R-nm", "geometry.R_nm",
                 "external radius for fixed-R [nm] (default 50)");
    add_override(apps["compare-inside-outside"], cmp, "--aref-nm", "scenario.aref_nm",
                 "additive-model calibration separation [nm] (default: a)");

    auto& rm = commons["region-map"];
    add_override(apps["region-map"], rm, "--a-grid", "scenario.a_grid",
                 "separation grid (default log:1:25:25)");
    add_override(apps["region-map"], rm, "--kappa", "scenario.kappa",
                 "dominance factor (default 10)");
    add_override(apps["region-map"], rm, "--R-nm", "geometry.R_nm",
                 "shell external radius [nm] (default 50)");
    add_override(apps["region-map"], rm, "--d-nm", "geometry.d_nm",
                 "shell thickness [nm] (default 30)");
    add_override(apps["region-map"], rm, "--r-tol-nm", "scenario.r_tol_nm",
                 "bisection tolerance on r [nm] (default 1e-6)");

    auto& kk = commons["kk-transform"];
    add_override(apps["kk-transform"], kk, "--input", "scenario.input",
                 "single-axis optical table file");
    add_override(apps["kk-transform"], kk, "--xi-grid", "scenario.xi_grid",
                 "imaginary-frequency grid (default log:0.01:100:50)");
    add_override(apps["kk-transform"], kk, "--low-extrapolation",
                 "scenario.low_extrapolation", "none (default), drude-tail, constant");
    add_override(apps["kk-transform"], kk, "--low-cutoff-ev", "scenario.low_cutoff_ev",
                 "constant-tail cutoff [eV] (default 1e-4)");
    add_override(apps["kk-transform"], kk, "--high-extrapolation",
                 "scenario.high_extrapolation", "none (default), inverse-cube");

    for (const auto& name : subs)
        add_override(apps[name], commons[name], "--unit", "output.unit",
                     "energy unit of output tables: eV (default) or 1e-20J");

    CLI11_PARSE(app, argc, argv);

    std::string sub_name;
    for (const auto& name : subs)
        if (apps[name]->parsed()) sub_name = name;

    try {
        const Common& c = commons[sub_name];
        Config cfg;
        if (!c.config_path.empty()) load_config_file(cfg, c.config_path);
        if (!c.material_path.empty()) load_config_file(cfg, c.material_path);
        for (const auto& [section_key, value] : c.overrides) {
            auto dot = section_key.find('.');
            cfg.set(section_key.substr(0, dot), section_key.substr(dot + 1), value);
        }

        if (sub_name == "point") return run_point(std::move(cfg), c.out_prefix);
        if (sub_name == "compare-inside-outside")
            return run_compare(std::move(cfg), c.out_prefix);
        if (sub_name == "region-map") return run_region_map(std::move(cfg), c.out_prefix);
        if (sub_name == "kk-transform")
            return run_kk_transform(std::move(cfg), c.out_prefix);
        return run_sweep(sub_name, std::move(cfg), c.out_prefix);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
