#include <cmath>
#include <sstream>
#include <vector>

#include "casipol/kramers_kronig.hpp"
#include "casipol/optical_table.hpp"
#include "casipol/permittivity.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casipol;

namespace {

// log-spaced synthetic table from an analytic eps''(omega)
OpticalAxisTable synth_table(double w_min, double w_max, int per_decade,
                             double (*eps2)(double), const char* name) {
    std::vector<OpticalRow> rows;
    int n = static_cast<int>(std::ceil(std::log10(w_max / w_min) * per_decade)) + 1;
    for (int i = 0; i < n; ++i) {
        double w = w_min * std::pow(w_max / w_min, double(i) / (n - 1));
        double e2 = eps2(w);
        // encode eps'' = 2 n k with n = 1
        rows.push_back({w, 1.0, 0.5 * e2});
    }
    return OpticalAxisTable(std::move(rows), name);
}

constexpr double kLorentzWp = 20.0, kLorentzW0 = 10.0, kLorentzGamma = 4.0;
double lorentz_eps2(double w) {
    double d = kLorentzW0 * kLorentzW0 - w * w;
    return kLorentzWp * kLorentzWp * kLorentzGamma * w /
           (d * d + kLorentzGamma * kLorentzGamma * w * w);
}
double lorentz_image(double xi) {
    return 1.0 + kLorentzWp * kLorentzWp /
                     (kLorentzW0 * kLorentzW0 + kLorentzGamma * xi + xi * xi);
}

constexpr double kDrudeWp = 12.0, kDrudeGamma = 5.0;
double drude_eps2(double w) {
    return kDrudeWp * kDrudeWp * kDrudeGamma /
           (w * (w * w + kDrudeGamma * kDrudeGamma));
}
double drude_image(double xi) {
    return 1.0 + kDrudeWp * kDrudeWp / (xi * (xi + kDrudeGamma));
}

}  // namespace

TEST_CASE("optical table parsing and validation") {
    SUBCASE("well-formed rows, comma or whitespace separated") {
        std::istringstream in("# comment\n1.0, 1.5, 0.2\n2.0 1.4 0.1\n\n3.0,1.3,0.05\n");
        OpticalAxisTable t = load_optical_axis(in, "test");
        CHECK(t.rows().size() == 3);
        CHECK(t.rows()[1].eps_imag() == doctest::Approx(2.0 * 1.4 * 0.1));
    }
    SUBCASE("negative extinction names the row") {
        std::istringstream in("1.0 1.5 0.2\n2.0 1.4 -0.1\n3.0 1.3 0.0\n");
        CHECK_THROWS_WITH_AS(load_optical_axis(in, "t"),
                             doctest::Contains("row 2"), std::runtime_error);
    }
    SUBCASE("unsorted energies") {
        std::istringstream in("1.0 1.5 0.2\n3.0 1.4 0.1\n2.0 1.3 0.0\n");
        CHECK_THROWS_WITH_AS(load_optical_axis(in, "t"),
                             doctest::Contains("non-monotone grid"), std::runtime_error);
    }
    SUBCASE("malformed row reports line number") {
        std::istringstream in("1.0 1.5 0.2\n2.0 oops 0.1\n");
        CHECK_THROWS_WITH_AS(load_optical_axis(in, "t"), doctest::Contains("line 2"),
                             std::runtime_error);
    }
    SUBCASE("too few rows") {
        std::istringstream in("1.0 1.5 0.2\n");
        CHECK_THROWS_AS(load_optical_axis(in, "t"), std::runtime_error);
    }
}

TEST_CASE("transparent table gives eps = 1") {
    std::istringstream in("0.5 1.2 0\n1.0 1.3 0\n5.0 1.1 0\n");
    OpticalAxisTable t = load_optical_axis(in, "glasslike");
    for (double xi : {0.0, 0.3, 2.0, 50.0})
        CHECK(kramers_kronig(t, xi) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("kramers-kronig rejects negative frequency") {
    std::istringstream in("0.5 1.2 0.1\n1.0 1.3 0.2\n");
    OpticalAxisTable t = load_optical_axis(in, "t");
    CHECK_THROWS_AS(kramers_kronig(t, -1.0), std::invalid_argument);
}

TEST_CASE("lorentz closed form agrees with quadrature of its eps''") {
    // sanity-check the analytic image itself before using it as oracle
    for (double xi : {1.0, 5.0, 20.0}) {
        auto integrand = [&](double lw) {
            double w = std::exp(lw);
            return w * w * lorentz_eps2(w) / (w * w + xi * xi);
        };
        double val = 1.0 + 2.0 / 3.141592653589793 *
                               test_oracles::trapezoid(integrand, std::log(1e-4),
                                                       std::log(1e6), 1e-9, 12);
        CHECK(val == doctest::Approx(lorentz_image(xi)).epsilon(1e-6));
    }
}

TEST_CASE("kramers-kronig round-trips the lorentz image") {
    OpticalAxisTable t = synth_table(kLorentzW0 / 100.0, kLorentzW0 * 100.0, 64,
                                     lorentz_eps2, "lorentz");
    ExtrapolationSpec extrap;
    extrap.high = HighFreqExtrapolation::InverseCube;
    for (double xi = kLorentzW0 / 10.0; xi <= 10.0 * kLorentzW0; xi *= 1.37) {
        double got = kramers_kronig(t, xi, extrap);
        CHECK(got == doctest::Approx(lorentz_image(xi)).epsilon(1e-3));
    }
}

TEST_CASE("kramers-kronig round-trips the drude image") {
    OpticalAxisTable t = synth_table(kDrudeGamma / 100.0, kDrudeGamma * 100.0, 64,
                                     drude_eps2, "drude");
    ExtrapolationSpec extrap;
    extrap.low = LowFreqExtrapolation::DrudeTail;
    extrap.high = HighFreqExtrapolation::InverseCube;
    for (double xi = kDrudeGamma / 10.0; xi <= 10.0 * kDrudeGamma; xi *= 1.37) {
        double got = kramers_kronig(t, xi, extrap);
        CHECK(got == doctest::Approx(drude_image(xi)).epsilon(1e-3));
    }
    // the drude tail makes the zero-frequency limit diverge
    CHECK(std::isinf(kramers_kronig(t, 0.0, extrap)));
}

TEST_CASE("kk value is stable under doubling the quadrature resolution") {
    OpticalAxisTable t = synth_table(0.1, 1000.0, 48, lorentz_eps2, "lorentz");
    ExtrapolationSpec extrap;
    extrap.high = HighFreqExtrapolation::InverseCube;
    KkSettings base, fine;
    fine.resolution = 2 * base.resolution;
    for (double xi : {0.0, 0.5, 3.0, 10.0, 123.0}) {
        double v1 = kramers_kronig(t, xi, extrap, base);
        double v2 = kramers_kronig(t, xi, extrap, fine);
        CHECK(std::abs(v1 - v2) <= 1e-4 * std::abs(v2));
    }
}

TEST_CASE("constant permittivity model") {
    PermittivityModel m = PermittivityModel::constant(2.0, 2.0);
    for (double xi : {0.0, 0.1, 7.0, 1e4}) {
        CHECK(m.eps_x(xi) == 2.0);
        CHECK(m.eps_z(xi) == 2.0);
    }
    CHECK_THROWS_AS(PermittivityModel::constant(0.5, 2.0), std::invalid_argument);
}

TEST_CASE("built model matches direct kk within interpolation tolerance") {
    OpticalDataTable tables;
    tables.x = synth_table(0.05, 2000.0, 48, drude_eps2, "x");
    tables.z = synth_table(0.05, 2000.0, 48, lorentz_eps2, "z");
    ExtrapolationSpec xs;
    xs.low = LowFreqExtrapolation::DrudeTail;
    xs.high = HighFreqExtrapolation::InverseCube;
    ExtrapolationSpec zs;
    zs.low = LowFreqExtrapolation::Constant;
    zs.high = HighFreqExtrapolation::InverseCube;
    PermittivityModel m = build_permittivity(tables, xs, zs);

    // off-grid probes across the cached range
    for (double xi = 3.7e-4; xi < 3e4; xi *= 2.31) {
        double direct_x = kramers_kronig(*tables.x, xi, xs);
        double direct_z = kramers_kronig(*tables.z, xi, zs);
        CHECK(m.eps_x(xi) == doctest::Approx(direct_x).epsilon(1e-6));
        CHECK(m.eps_z(xi) == doctest::Approx(direct_z).epsilon(1e-6));
    }
}

TEST_CASE("built model is monotone, >= 1, and -> 1 at high frequency") {
    OpticalDataTable tables;
    tables.x = synth_table(0.05, 2000.0, 32, drude_eps2, "x");
    tables.z = synth_table(0.05, 2000.0, 32, lorentz_eps2, "z");
    ExtrapolationSpec xs{LowFreqExtrapolation::DrudeTail, 1e-4,
                         HighFreqExtrapolation::InverseCube};
    ExtrapolationSpec zs{LowFreqExtrapolation::Constant, 1e-4,
                         HighFreqExtrapolation::InverseCube};
    PermittivityModel m = build_permittivity(tables, xs, zs);

    double px = 1e308, pz = 1e308;
    for (double xi = 1e-4; xi < 1e5; xi *= 1.02) {
        Permittivities e = m.eval(xi);
        CHECK(e.eps_x >= 1.0);
        CHECK(e.eps_z >= 1.0);
        CHECK(e.eps_x <= px * (1.0 + 1e-12));
        CHECK(e.eps_z <= pz * (1.0 + 1e-12));
        px = e.eps_x;
        pz = e.eps_z;
    }
    // far above the tabulated range
    CHECK(m.eps_x(2e5) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(m.eps_z(2e5) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("missing axis is inconsistent coverage") {
    OpticalDataTable tables;
    tables.x = synth_table(0.1, 100.0, 16, drude_eps2, "x");
    CHECK_THROWS_WITH_AS(build_permittivity(tables, {}, {}),
                         doctest::Contains("inconsistent axis coverage"),
                         std::runtime_error);
}
