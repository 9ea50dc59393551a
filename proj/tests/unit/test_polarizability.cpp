#include <cmath>

#include "casipol/polarizability.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casipol;

TEST_CASE("hydrogen presets") {
    OscillatorModel atom = preset(Species::HydrogenAtom);
    CHECK(atom.alpha0_au() == 4.50);
    CHECK(atom.omega0_ev() == 11.65);
    CHECK(alpha_imag(atom, 0.0) == doctest::Approx(4.50).epsilon(1e-15));

    OscillatorModel mol = preset("hydrogen-molecule");
    CHECK(mol.alpha0_au() == 5.439);
    CHECK(mol.omega0_ev() == 14.09);

    CHECK_THROWS_WITH_AS(preset("helium"), doctest::Contains("hydrogen-atom"),
                         std::invalid_argument);
}

TEST_CASE("oscillator model validates parameters") {
    CHECK_THROWS_AS(OscillatorModel(0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(OscillatorModel(4.5, -1.0), std::invalid_argument);
}

TEST_CASE("half value at the resonance energy") {
    OscillatorModel m(3.0, 7.5);
    CHECK(alpha_imag(m, 7.5) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("monotone decrease and xi^-2 decay") {
    OscillatorModel m = preset(Species::HydrogenAtom);
    double prev = alpha_imag(m, 0.0);
    for (double xi = 0.1; xi < 1e4; xi *= 1.3) {
        double v = alpha_imag(m, xi);
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
    }
    // xi^2 alpha(i xi) -> g at xi = 1e3 omega0
    double xi = 1e3 * m.omega0_ev();
    CHECK(xi * xi * alpha_imag(m, xi) ==
          doctest::Approx(m.strength_au_ev2()).epsilon(1e-5));
}

TEST_CASE("c6 quadrature identity") {
    // (3/pi) integral alpha(i xi)^2 dxi = (3/4) alpha(0)^2 omega0
    OscillatorModel m = preset(Species::HydrogenAtom);
    double a0 = m.alpha0_au() * constants.polarizability_au_nm3;
    double g = a0 * m.omega0_ev() * m.omega0_ev();
    auto f = [&](double xi) {
        double al = g / (m.omega0_ev() * m.omega0_ev() + xi * xi);
        return al * al;
    };
    double integral =
        test_oracles::trapezoid(f, 0.0, 1000.0 * m.omega0_ev(), 1e-9, 14);
    double lhs = 3.0 / 3.141592653589793 * integral;
    double rhs = 0.75 * a0 * a0 * m.omega0_ev();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
}
