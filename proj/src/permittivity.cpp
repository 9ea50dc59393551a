#include "casipol/permittivity.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace casipol {

AxisResponse AxisResponse::constant(double epsilon) {
    if (!(epsilon >= 1.0))
        throw std::invalid_argument("AxisResponse: constant epsilon must be >= 1");
    AxisResponse r;
    r.kind_ = Kind::Constant;
    r.a_ = epsilon;
    r.zero_limit_ = epsilon;
    return r;
}

AxisResponse AxisResponse::drude(double plasma_ev, double gamma_ev) {
    if (!(plasma_ev > 0.0) || !(gamma_ev > 0.0))
        throw std::invalid_argument("AxisResponse: Drude parameters must be > 0");
    AxisResponse r;
    r.kind_ = Kind::Drude;
    r.a_ = plasma_ev;
    r.b_ = gamma_ev;
    r.zero_limit_ = std::numeric_limits<double>::infinity();
    return r;
}

AxisResponse AxisResponse::lorentz(double plasma_ev, double resonance_ev,
                                   double gamma_ev) {
    if (!(plasma_ev > 0.0) || !(resonance_ev > 0.0) || !(gamma_ev >= 0.0))
        throw std::invalid_argument("AxisResponse: Lorentz parameters must be > 0");
    AxisResponse r;
    r.kind_ = Kind::Lorentz;
    r.a_ = plasma_ev;
    r.b_ = resonance_ev;
    r.c_ = gamma_ev;
    r.zero_limit_ = 1.0 + (plasma_ev / resonance_ev) * (plasma_ev / resonance_ev);
    return r;
}

AxisResponse AxisResponse::from_table(const OpticalAxisTable& table,
                                      const ExtrapolationSpec& extrap,
                                      const KkSettings& kk, const CacheSettings& cache) {
    if (!(cache.xi_min_ev > 0.0) || !(cache.xi_max_ev > cache.xi_min_ev) ||
        cache.points_per_decade < 4)
        throw std::invalid_argument("AxisResponse: bad cache settings");

    AxisResponse r;
    r.kind_ = Kind::Table;
    r.source_ = table.name();
    r.zero_limit_ = kramers_kronig(table, 0.0, extrap, kk);

    double log_min = std::log10(cache.xi_min_ev);
    double log_max = std::log10(cache.xi_max_ev);
    int n = static_cast<int>(std::ceil((log_max - log_min) * cache.points_per_decade)) + 1;
    std::vector<double> lx(n), ly(n);
    bool any_nonzero = false;
    for (int i = 0; i < n; ++i) {
        double lg = log_min + (log_max - log_min) * i / (n - 1);
        double xi = std::pow(10.0, lg);
        double eps = kramers_kronig(table, xi, extrap, kk);
        double em1 = std::max(eps - 1.0, 0.0);
        if (em1 > 1e-250) any_nonzero = true;
        lx[i] = std::log(xi);
        ly[i] = std::log(std::max(em1, 1e-300));
    }
    if (!any_nonzero) {
        // Fully transparent table (k = 0 everywhere): eps(i xi) = 1 exactly.
        r.identically_one_ = true;
        r.zero_limit_ = 1.0;
        return r;
    }
    r.cache_ = std::make_shared<const PchipInterpolant>(std::move(lx), std::move(ly));
    return r;
}

double AxisResponse::eval(double xi_ev) const {
    if (xi_ev < 0.0) throw std::invalid_argument("AxisResponse: xi must be >= 0");
    switch (kind_) {
        case Kind::Constant:
            return a_;
        case Kind::Drude:
            if (xi_ev == 0.0) return std::numeric_limits<double>::infinity();
            return 1.0 + a_ * a_ / (xi_ev * (xi_ev + b_));
        case Kind::Lorentz:
            return 1.0 + a_ * a_ / (b_ * b_ + c_ * xi_ev + xi_ev * xi_ev);
        case Kind::Table:
            break;
    }
    if (identically_one_) return 1.0;
    if (xi_ev == 0.0) return zero_limit_;
    // PCHIP in log-log space; beyond the grid the interpolant extends
    // linearly, which reproduces the power-law tails (the high side decays
    // as xi^-2, the low side follows the fitted local slope).
    return 1.0 + std::exp((*cache_)(std::log(xi_ev)));
}

std::string AxisResponse::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Constant:
            os << "constant(eps=" << a_ << ")";
            break;
        case Kind::Drude:
            os << "drude(wp=" << a_ << "eV,gamma=" << b_ << "eV)";
            break;
        case Kind::Lorentz:
            os << "lorentz(wp=" << a_ << "eV,w0=" << b_ << "eV,gamma=" << c_ << "eV)";
            break;
        case Kind::Table:
            os << "table(" << source_ << ")";
            break;
    }
    return os.str();
}

PermittivityModel::PermittivityModel(AxisResponse x, AxisResponse z,
                                     Provenance provenance, std::string description)
    : x_(std::move(x)), z_(std::move(z)), provenance_(provenance),
      description_(std::move(description)) {}

PermittivityModel PermittivityModel::constant(double eps_x, double eps_z) {
    std::ostringstream os;
    os << "constant eps_x=" << eps_x << " eps_z=" << eps_z;
    return PermittivityModel(AxisResponse::constant(eps_x), AxisResponse::constant(eps_z),
                             Provenance::Constant, os.str());
}

PermittivityModel build_permittivity(const OpticalDataTable& table,
                                     const ExtrapolationSpec& x_extrap,
                                     const ExtrapolationSpec& z_extrap,
                                     const KkSettings& kk, const CacheSettings& cache) {
    if (!table.x || !table.z)
        throw std::runtime_error(
            "build_permittivity: inconsistent axis coverage (both x and z tables required)");
    AxisResponse x = AxisResponse::from_table(*table.x, x_extrap, kk, cache);
    AxisResponse z = AxisResponse::from_table(*table.z, z_extrap, kk, cache);
    std::string desc = "x:" + x.describe() + " z:" + z.describe();
    return PermittivityModel(std::move(x), std::move(z),
                             PermittivityModel::Provenance::OpticalTable, desc);
}

PermittivityModel build_permittivity(const AxisResponse& x, const AxisResponse& z,
                                     PermittivityModel::Provenance provenance,
                                     const std::string& description) {
    return PermittivityModel(x, z, provenance, description);
}

const char* to_string(PermittivityModel::Provenance p) {
    switch (p) {
        case PermittivityModel::Provenance::OpticalTable: return "optical-table";
        case PermittivityModel::Provenance::AnalyticOscillator: return "analytic-oscillator";
        case PermittivityModel::Provenance::AnalyticDrude: return "analytic-drude";
        case PermittivityModel::Provenance::Constant: return "constant";
        case PermittivityModel::Provenance::Mixed: return "mixed";
    }
    return "unknown";
}

}  // namespace casipol
