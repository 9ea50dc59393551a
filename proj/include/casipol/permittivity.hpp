#pragma once

#include <memory>
#include <string>

#include "casipol/interpolation.hpp"
#include "casipol/kramers_kronig.hpp"
#include "casipol/optical_table.hpp"

namespace casipol {

// eps_x(i xi), eps_z(i xi) at one imaginary frequency.
struct Permittivities {
    double eps_x;
    double eps_z;
};

// Analytic single-axis responses evaluated in closed form.
struct ConstantResponse {
    double epsilon = 1.0;  // >= 1
};
struct DrudeResponse {
    double plasma_ev;  // eps = 1 + wp^2 / (xi (xi + gamma)); infinite at xi = 0
    double gamma_ev;
};
struct LorentzResponse {
    double plasma_ev;  // eps = 1 + wp^2 / (w0^2 + gamma xi + xi^2)
    double resonance_ev;
    double gamma_ev;
};

struct CacheSettings {
    double xi_min_ev = 1e-5;
    double xi_max_ev = 1e5;
    int points_per_decade = 128;
};

// One axis of the dielectric response on the imaginary axis. Table-backed
// axes cache the Kramers-Kronig transform on a fixed log-spaced xi grid
// with monotone (PCHIP) interpolation in log-log space; analytic axes
// evaluate their closed forms. Immutable and safe for concurrent use.
class AxisResponse {
  public:
    static AxisResponse constant(double epsilon);
    static AxisResponse drude(double plasma_ev, double gamma_ev);
    static AxisResponse lorentz(double plasma_ev, double resonance_ev, double gamma_ev);
    static AxisResponse from_table(const OpticalAxisTable& table,
                                   const ExtrapolationSpec& extrap,
                                   const KkSettings& kk = {},
                                   const CacheSettings& cache = {});

    // eps(i xi); xi = 0 gives the zero-frequency limit (possibly +inf).
    double eval(double xi_ev) const;
    std::string describe() const;

  private:
    AxisResponse() = default;

    enum class Kind { Constant, Drude, Lorentz, Table } kind_ = Kind::Constant;
    double a_ = 1.0, b_ = 0.0, c_ = 0.0;  // analytic parameters
    // Table cache: ln(eps-1) over ln(xi), plus the exact zero limit.
    std::shared_ptr<const PchipInterpolant> cache_;
    double zero_limit_ = 1.0;
    bool identically_one_ = false;
    std::string source_;
};

// The uniaxial material response consumed by the reflection coefficients.
class PermittivityModel {
  public:
    enum class Provenance { OpticalTable, AnalyticOscillator, AnalyticDrude, Constant, Mixed };

    PermittivityModel(AxisResponse x, AxisResponse z, Provenance provenance,
                      std::string description);

    Permittivities eval(double xi_ev) const {
        return {x_.eval(xi_ev), z_.eval(xi_ev)};
    }
    double eps_x(double xi_ev) const { return x_.eval(xi_ev); }
    double eps_z(double xi_ev) const { return z_.eval(xi_ev); }
    Provenance provenance() const { return provenance_; }
    const std::string& description() const { return description_; }

    static PermittivityModel constant(double eps_x, double eps_z);

  private:
    AxisResponse x_, z_;
    Provenance provenance_;
    std::string description_;
};

// Builds a model from a two-axis optical table; throws std::runtime_error
// if either axis is missing ("inconsistent axis coverage").
PermittivityModel build_permittivity(const OpticalDataTable& table,
                                     const ExtrapolationSpec& x_extrap,
                                     const ExtrapolationSpec& z_extrap,
                                     const KkSettings& kk = {},
                                     const CacheSettings& cache = {});

// Builds a model from analytic per-axis responses.
PermittivityModel build_permittivity(const AxisResponse& x, const AxisResponse& z,
                                     PermittivityModel::Provenance provenance,
                                     const std::string& description);

const char* to_string(PermittivityModel::Provenance p);

}  // namespace casipol
