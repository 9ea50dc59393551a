#include <cmath>
#include <limits>

#include "casipol/free_energy.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casipol;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

PermittivityModel vacuum_material() { return PermittivityModel::constant(1.0, 1.0); }

FreeEnergySettings fast_settings() {
    FreeEnergySettings s;
    s.summation.term_rel_tol = 1e-9;
    s.quadrature.rel_tol = 1e-8;
    return s;
}

}  // namespace

TEST_CASE("plate integrand spec points") {
    UniaxialLayer vac = UniaxialLayer::semispace(1.0, 1.0);
    for (double zeta : {0.0, 1.0, 4.0})
        CHECK(integrand_plate(vac, zeta, zeta + 0.7) == 0.0);

    UniaxialLayer iso2 = UniaxialLayer::semispace(2.0, 2.0);
    double r = (2.0 - std::sqrt(2.0)) / (2.0 + std::sqrt(2.0));
    double expected = std::exp(-1.0) * ((2.0 - 1.0) * r + 1.0 * r);
    CHECK(integrand_plate(iso2, 1.0, 1.0) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(integrand_plate(iso2, 1.0, 1.0) == doctest::Approx(0.126243).epsilon(1e-5));
}

TEST_CASE("perfect reflector zero-frequency integral equals 4") {
    UniaxialLayer metal = UniaxialLayer::semispace(kInf, kInf);
    auto f = [&](double y) { return integrand_plate(metal, 0.0, y); };
    double val = test_oracles::trapezoid(f, 0.0, 60.0, 1e-9, 12);
    CHECK(val == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("vacuum layer gives exactly zero in generic mode") {
    ThermalGeometry geom(300.0, 3.0);
    FreeEnergySettings s = fast_settings();
    s.summation.zero_frequency_mode = ZeroFrequencyMode::Generic;
    FreeEnergyResult r =
        free_energy_semispace(geom, vacuum_material(), preset(Species::HydrogenAtom), s);
    CHECK(r.value_ev == 0.0);
    CHECK(r.converged());
}

TEST_CASE("paper-metallic static term survives alone for a vacuum layer") {
    // only the 2 alpha(0) term is nonzero, so F = -k_B T alpha(0) / (4 a^3)
    ThermalGeometry geom(300.0, 3.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);
    FreeEnergyResult r =
        free_energy_semispace(geom, vacuum_material(), atom, fast_settings());
    double expected = -geom.thermal_energy_ev() * atom.alpha_nm3(0.0) /
                      (4.0 * std::pow(3.0, 3));
    CHECK(r.value_ev == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("semispace equals the thick-plate limit") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = PermittivityModel::constant(4.0, 2.5);
    OscillatorModel atom = preset(Species::HydrogenAtom);
    FreeEnergyResult semi = free_energy_semispace(geom, m, atom, fast_settings());
    FreeEnergyResult thick =
        free_energy_plate(geom, m, 1e6 * 3.0, atom, fast_settings());
    CHECK(thick.value_ev == doctest::Approx(semi.value_ev).epsilon(1e-6));
}

TEST_CASE("engine matches the brute-force oracle on a constant material") {
    ThermalGeometry geom(300.0, 5.0);
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);

    FreeEnergyResult engine = free_energy_semispace(geom, m, atom, fast_settings());
    double oracle = test_oracles::free_energy_plate(geom, m, kInf, atom);
    CHECK(engine.value_ev == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(engine.converged());

    FreeEnergyResult plate = free_energy_plate(geom, m, 4.0, atom, fast_settings());
    double plate_oracle = test_oracles::free_energy_plate(geom, m, 4.0, atom);
    CHECK(plate.value_ev == doctest::Approx(plate_oracle).epsilon(1e-6));
}

TEST_CASE("generic mode with a conducting axis reduces to paper-metallic") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = build_permittivity(
        AxisResponse::drude(7.0, 7.0), AxisResponse::lorentz(26.0, 19.0, 10.0),
        PermittivityModel::Provenance::Mixed, "drude-lorentz");
    OscillatorModel atom = preset(Species::HydrogenAtom);
    FreeEnergySettings metallic = fast_settings();
    FreeEnergySettings generic = fast_settings();
    generic.summation.zero_frequency_mode = ZeroFrequencyMode::Generic;
    FreeEnergyResult a = free_energy_semispace(geom, m, atom, metallic);
    FreeEnergyResult b = free_energy_semispace(geom, m, atom, generic);
    CHECK(a.value_ev == doctest::Approx(b.value_ev).epsilon(1e-9));

    // with a finite zero-frequency response the generic mode binds less
    PermittivityModel finite = PermittivityModel::constant(5.0, 5.0);
    FreeEnergyResult c = free_energy_semispace(geom, finite, atom, metallic);
    FreeEnergyResult d = free_energy_semispace(geom, finite, atom, generic);
    CHECK(std::abs(d.value_ev) < std::abs(c.value_ev));
}

TEST_CASE("results are identical for any worker count") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);
    FreeEnergySettings s1 = fast_settings(), s4 = fast_settings(), s17 = fast_settings();
    s1.workers = 1;
    s4.workers = 4;
    s17.workers = 17;
    FreeEnergyResult r1 = free_energy_semispace(geom, m, atom, s1);
    FreeEnergyResult r4 = free_energy_semispace(geom, m, atom, s4);
    FreeEnergyResult r17 = free_energy_semispace(geom, m, atom, s17);
    CHECK(r1.value_ev == r4.value_ev);  // bitwise
    CHECK(r1.value_ev == r17.value_ev);
    CHECK(r1.terms_used == r4.terms_used);
    CHECK(r1.truncation_estimate_ev == r4.truncation_estimate_ev);
}

TEST_CASE("truncation estimate bounds the effect of tightening tolerances") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);

    FreeEnergySettings loose = fast_settings();
    loose.summation.term_rel_tol = 1e-6;
    FreeEnergyResult r = free_energy_semispace(geom, m, atom, loose);
    CHECK(std::abs(r.truncation_estimate_ev) <=
          loose.summation.term_rel_tol * std::abs(r.value_ev));

    FreeEnergySettings tighter = loose;
    tighter.summation.term_rel_tol = 5e-7;
    FreeEnergyResult r2 = free_energy_semispace(geom, m, atom, tighter);
    CHECK(std::abs(r.value_ev - r2.value_ev) <= std::abs(r.truncation_estimate_ev));

    FreeEnergySettings finer_quad = loose;
    finer_quad.quadrature.rel_tol = 0.5e-8;
    FreeEnergyResult r3 = free_energy_semispace(geom, m, atom, finer_quad);
    CHECK(std::abs(r.value_ev - r3.value_ev) <= std::abs(r.truncation_estimate_ev));
}

TEST_CASE("summation cap reports partial convergence") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    FreeEnergySettings s = fast_settings();
    s.summation.l_max_cap = 10;  // zeta_10 << 5, cannot stop
    FreeEnergyResult r =
        free_energy_semispace(geom, m, preset(Species::HydrogenAtom), s);
    CHECK_FALSE(r.sum_converged);
    CHECK(r.terms_used == 10);
    CHECK(std::isfinite(r.value_ev));
    CHECK(r.truncation_estimate_ev > 0.0);
}

TEST_CASE("settings are validated") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = vacuum_material();
    OscillatorModel atom = preset(Species::HydrogenAtom);
    FreeEnergySettings s = fast_settings();
    s.summation.term_rel_tol = 1e-2;
    CHECK_THROWS_AS(free_energy_semispace(geom, m, atom, s), std::invalid_argument);
    s = fast_settings();
    s.quadrature.rel_tol = 1e-3;
    CHECK_THROWS_AS(free_energy_semispace(geom, m, atom, s), std::invalid_argument);
    s = fast_settings();
    s.summation.l_max_cap = 5;
    CHECK_THROWS_AS(free_energy_semispace(geom, m, atom, s), std::invalid_argument);
    CHECK_THROWS_AS(free_energy_plate(geom, m, -1.0, atom, fast_settings()),
                    std::invalid_argument);
}

TEST_CASE("attraction and monotonicity in separation and thickness") {
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);
    double prev = -kInf;
    for (double a : {2.0, 5.0, 20.0, 80.0}) {
        ThermalGeometry geom(300.0, a);
        FreeEnergyResult r = free_energy_semispace(geom, m, atom, fast_settings());
        CHECK(r.value_ev < 0.0);
        CHECK(r.value_ev > prev);  // magnitude decreases with a
        prev = r.value_ev;
    }
    ThermalGeometry geom(300.0, 3.0);
    FreeEnergyResult semi = free_energy_semispace(geom, m, atom, fast_settings());
    double prev_mag = 0.0;
    for (double d : {0.5, 2.0, 10.0, 50.0}) {
        FreeEnergyResult p = free_energy_plate(geom, m, d, atom, fast_settings());
        CHECK(std::abs(p.value_ev) >= prev_mag);
        CHECK(std::abs(p.value_ev) <= std::abs(semi.value_ev));
        prev_mag = std::abs(p.value_ev);
    }
}

TEST_CASE("cylinder pfa precondition") {
    ThermalGeometry geom(300.0, 40.0);
    CylinderGeometry shell(50.0, 20.0);
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);
    CHECK_THROWS_WITH_AS(
        free_energy_cylinder(geom, shell, m, atom, fast_settings()),
        doctest::Contains("outside PFA validity"), std::invalid_argument);
    // override computes anyway
    FreeEnergyResult r =
        free_energy_cylinder(geom, shell, m, atom, fast_settings(), true);
    CHECK(r.value_ev < 0.0);
}

TEST_CASE("cylinder geometry validation") {
    CHECK_THROWS_AS(CylinderGeometry(10.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(CylinderGeometry(10.0, -1.0), std::invalid_argument);
    CHECK(CylinderGeometry(50.0, 20.0).thickness_nm() == 30.0);
}

TEST_CASE("cylinder reduces to the plate for huge radius") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);
    double d = 10.0;
    double R = 1e6 * 3.0;
    CylinderGeometry shell(R, R - d);
    FreeEnergyResult cyl = free_energy_cylinder(geom, shell, m, atom, fast_settings());
    FreeEnergyResult plate = free_energy_plate(geom, m, d, atom, fast_settings());
    CHECK(std::abs(cyl.value_ev - plate.value_ev) <= 1e-4 * std::abs(plate.value_ev));
}

TEST_CASE("cylinder static factors at R = a") {
    // vacuum layer leaves only the static terms; the cylinder/plate ratio
    // is then sqrt(R/(R+a)) * (4R+3a)/(2(R+a)) / 2 = sqrt(1/2) * (7/4) / 2
    double a = 6.0;
    ThermalGeometry geom(300.0, a);
    PermittivityModel m = vacuum_material();
    OscillatorModel atom = preset(Species::HydrogenAtom);
    CylinderGeometry shell(a, 0.5 * a);
    FreeEnergyResult cyl =
        free_energy_cylinder(geom, shell, m, atom, fast_settings(), true);
    FreeEnergyResult plate = free_energy_semispace(geom, m, atom, fast_settings());
    double expected = std::sqrt(0.5) * (7.0 / 4.0) / 2.0;
    CHECK(cyl.value_ev / plate.value_ev == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("cylinder magnitude is below the equal-thickness plate") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);
    CylinderGeometry shell(50.0, 20.0);
    FreeEnergyResult cyl = free_energy_cylinder(geom, shell, m, atom, fast_settings());
    FreeEnergyResult plate =
        free_energy_plate(geom, m, shell.thickness_nm(), atom, fast_settings());
    CHECK(std::abs(cyl.value_ev) < std::abs(plate.value_ev));
}

TEST_CASE("cylinder engine matches the brute-force oracle") {
    ThermalGeometry geom(300.0, 3.0);
    PermittivityModel m = PermittivityModel::constant(3.0, 2.0);
    OscillatorModel atom = preset(Species::HydrogenAtom);
    CylinderGeometry shell(50.0, 20.0);
    FreeEnergyResult cyl = free_energy_cylinder(geom, shell, m, atom, fast_settings());
    double oracle = test_oracles::free_energy_cylinder(geom, shell, m, atom);
    CHECK(cyl.value_ev == doctest::Approx(oracle).epsilon(1e-6));
}
