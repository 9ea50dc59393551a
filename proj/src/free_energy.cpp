#include "casipol/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "casipol/quadrature.hpp"

namespace casipol {

double integrand_plate(const UniaxialLayer& layer, double zeta, double y) {
    double rp = r_parallel(layer, zeta, y);
    double rt = r_perp(layer, zeta, y);
    return std::exp(-y) * ((2.0 * y * y - zeta * zeta) * rp + zeta * zeta * rt);
}

double integrand_cylinder(const UniaxialLayer& layer, double zeta, double y, double c0) {
    double rp = r_parallel(layer, zeta, y);
    double rt = r_perp(layer, zeta, y);
    double z2 = zeta * zeta;
    return std::exp(-y) * (y - c0) * ((2.0 * y * y - z2) * rp + z2 * rt) / y;
}

namespace {

// Kahan-Babuska (Neumaier) compensated accumulator.
struct CompensatedSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

void validate(const FreeEnergySettings& st) {
    const SummationSettings& s = st.summation;
    if (!(s.term_rel_tol > 0.0) || s.term_rel_tol > 1e-3)
        throw std::invalid_argument("SummationSettings: term_rel_tol must be in (0, 1e-3]");
    if (s.l_max_cap < 10)
        throw std::invalid_argument("SummationSettings: l_max_cap must be >= 10");
    const QuadratureSettings& q = st.quadrature;
    if (!(q.rel_tol > 0.0) || q.rel_tol > 1e-4)
        throw std::invalid_argument("QuadratureSettings: rel_tol must be in (0, 1e-4]");
    if (q.max_refinements < 0)
        throw std::invalid_argument("QuadratureSettings: max_refinements must be >= 0");
}

int resolve_workers(int requested) {
    if (requested > 0) return std::min(requested, 256);
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 64u));
}

struct Body {
    bool cylinder = false;
    double thickness_ratio = UniaxialLayer::infinite_thickness();  // d/(2a)
    double c0 = 0.0;           // a/(2(R+a)), cylinder only
    double prefactor_ev = 0.0; // -kBT/(8a^3) [* sqrt(R/(R+a))], polarizability in nm^3
};

struct TermResult {
    double value = 0.0;  // alpha(i xi_l) * I_l, alpha in nm^3
    int refinements = 0;
    bool converged = false;
};

// One l >= 1 Matsubara term. The substitution y = zeta_l + t exposes the
// e^{-t} weight: the term is alpha(i xi_l) e^{-zeta_l} integral_0^inf
// e^{-t} B(zeta_l + t) dt with the bare bracket B (no exponential), so
// nothing overflows at far-out quadrature nodes.
TermResult evaluate_term(long l, const MatsubaraGrid& grid, const Body& body,
                         const PermittivityModel& material,
                         const OscillatorModel& particle,
                         const QuadratureSettings& quad) {
    double zeta = grid.zeta(l);
    double xi = grid.xi_ev(l);
    Permittivities eps = material.eval(xi);
    UniaxialLayer layer{eps.eps_x, eps.eps_z, body.thickness_ratio};
    double z2 = zeta * zeta;

    auto g = [&](double t) {
        double y = zeta + t;
        double bracket = (2.0 * y * y - z2) * r_parallel(layer, zeta, y) +
                         z2 * r_perp(layer, zeta, y);
        if (body.cylinder) bracket *= (y - body.c0) / y;
        return bracket;
    };
    // the reflection coefficients turn over on the scales zeta (layer onset)
    // and 1/thickness_ratio (coth transition of thin slabs)
    double scale = zeta;
    if (!layer.is_semispace()) scale = std::min(scale, 1.0 / body.thickness_ratio);
    ExpQuadratureResult q =
        integrate_exp_panels(g, scale, quad.rel_tol, quad.max_refinements);
    TermResult r;
    r.value = particle.alpha_nm3(xi) * std::exp(-zeta) * q.value;
    r.refinements = q.refinements;
    r.converged = q.converged;
    return r;
}

double zero_frequency_term(const MatsubaraGrid& grid, const Body& body,
                           const PermittivityModel& material,
                           const OscillatorModel& particle,
                           const FreeEnergySettings& st, TermResult& meta) {
    double alpha0 = particle.alpha_nm3(0.0);
    if (st.summation.zero_frequency_mode == ZeroFrequencyMode::PaperMetallic) {
        meta.converged = true;
        if (!body.cylinder) return 2.0 * alpha0;
        // (4R + 3a)/(2(R + a)) alpha(0) expressed through c0 = a/(2(R+a)).
        return (2.0 - body.c0) * alpha0;
    }
    Permittivities eps0 = material.eval(0.0);
    UniaxialLayer layer{eps0.eps_x, eps0.eps_z, body.thickness_ratio};
    auto g = [&](double y) {
        double rp = r_parallel(layer, 0.0, y);
        return body.cylinder ? 2.0 * y * (y - body.c0) * rp : 2.0 * y * y * rp;
    };
    double scale = layer.is_semispace() ? 1.0 : 1.0 / body.thickness_ratio;
    ExpQuadratureResult q = integrate_exp_panels(g, scale, st.quadrature.rel_tol,
                                                 st.quadrature.max_refinements);
    meta.refinements = q.refinements;
    meta.converged = q.converged;
    return 0.5 * alpha0 * q.value;
}

// Evaluates terms [l_begin, l_end) into out[], split across workers.
// Each term is a pure function of l, so the partition does not affect
// the values; the caller reduces in ascending l.
template <typename Fn>
void parallel_terms(long l_begin, long l_end, int workers, std::vector<TermResult>& out,
                    Fn&& fn) {
    long count = l_end - l_begin;
    out.resize(count);
    int n = std::min<long>(workers, count);
    if (n <= 1) {
        for (long i = 0; i < count; ++i) out[i] = fn(l_begin + i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mtx;
    pool.reserve(n);
    for (int w = 0; w < n; ++w) {
        long chunk_begin = l_begin + count * w / n;
        long chunk_end = l_begin + count * (w + 1) / n;
        pool.emplace_back([&, chunk_begin, chunk_end]() {
            try {
                for (long l = chunk_begin; l < chunk_end; ++l)
                    out[l - l_begin] = fn(l);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mtx);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

FreeEnergyResult engine(const ThermalGeometry& geom, const Body& body,
                        const PermittivityModel& material,
                        const OscillatorModel& particle,
                        const FreeEnergySettings& settings) {
    validate(settings);
    const SummationSettings& sum = settings.summation;
    MatsubaraGrid grid(geom);
    int workers = resolve_workers(settings.workers);

    FreeEnergyResult result;
    TermResult zero_meta;
    CompensatedSum acc;
    acc.add(zero_frequency_term(grid, body, material, particle, settings, zero_meta));
    result.quadrature_refinements = zero_meta.refinements;
    bool quad_ok = zero_meta.converged;

    // Geometric floor for the observed term decay ratio.
    double ratio_floor = std::exp(-grid.zeta_step());
    double prev_term = 0.0;
    double tail_estimate = 0.0;
    int consecutive = 0;
    bool stopped = false;
    long l = 1;
    constexpr long kBatch = 256;
    std::vector<TermResult> batch;

    while (!stopped && l <= sum.l_max_cap) {
        long l_end = std::min(l + kBatch - 1, sum.l_max_cap) + 1;
        parallel_terms(l, l_end, workers, batch, [&](long li) {
            return evaluate_term(li, grid, body, material, particle, settings.quadrature);
        });
        for (long li = l; li < l_end; ++li) {
            const TermResult& t = batch[li - l];
            acc.add(t.value);
            result.quadrature_refinements =
                std::max(result.quadrature_refinements, t.refinements);
            quad_ok = quad_ok && t.converged;
            result.terms_used = li;

            double mag = std::abs(t.value);
            if (mag == 0.0 && prev_term == 0.0) {
                tail_estimate = 0.0;
            } else {
                double ratio = prev_term > 0.0 ? mag / prev_term : 1.0;
                ratio = std::min(0.999, std::max(ratio, ratio_floor));
                tail_estimate = mag * ratio / (1.0 - ratio);
            }
            prev_term = mag;

            if (grid.zeta(li) > 5.0 &&
                tail_estimate <= sum.term_rel_tol * std::abs(acc.value())) {
                if (++consecutive >= 3) {
                    stopped = true;
                    break;
                }
            } else {
                consecutive = 0;
            }
        }
        l = l_end;
    }

    result.sum_converged = stopped;
    result.quadrature_converged = quad_ok;
    result.value_ev = body.prefactor_ev * acc.value() + 0.0;  // normalize -0
    result.truncation_estimate_ev = std::abs(body.prefactor_ev) * tail_estimate;
    return result;
}

Body make_plate_body(const ThermalGeometry& geom, double thickness_nm) {
    if (!(thickness_nm > 0.0))
        throw std::invalid_argument("free_energy_plate: thickness must be > 0 nm");
    Body b;
    b.thickness_ratio = thickness_nm / (2.0 * geom.separation_nm());
    b.prefactor_ev =
        -geom.thermal_energy_ev() / (8.0 * std::pow(geom.separation_nm(), 3));
    return b;
}

}  // namespace

FreeEnergyResult free_energy_plate(const ThermalGeometry& geom,
                                   const PermittivityModel& material,
                                   double thickness_nm, const OscillatorModel& particle,
                                   const FreeEnergySettings& settings) {
    return engine(geom, make_plate_body(geom, thickness_nm), material, particle, settings);
}

FreeEnergyResult free_energy_semispace(const ThermalGeometry& geom,
                                       const PermittivityModel& material,
                                       const OscillatorModel& particle,
                                       const FreeEnergySettings& settings) {
    Body b;
    b.thickness_ratio = UniaxialLayer::infinite_thickness();
    b.prefactor_ev =
        -geom.thermal_energy_ev() / (8.0 * std::pow(geom.separation_nm(), 3));
    return engine(geom, b, material, particle, settings);
}

FreeEnergyResult free_energy_cylinder(const ThermalGeometry& geom,
                                      const CylinderGeometry& shell,
                                      const PermittivityModel& material,
                                      const OscillatorModel& particle,
                                      const FreeEnergySettings& settings,
                                      bool allow_outside_pfa) {
    double a = geom.separation_nm();
    double R = shell.outer_radius_nm();
    if (!shell.pfa_valid(a) && !allow_outside_pfa)
        throw std::invalid_argument(
            "free_energy_cylinder: outside PFA validity a <= R/2 "
            "(pass allow_outside_pfa to override)");
    Body b;
    b.cylinder = true;
    b.thickness_ratio = shell.thickness_nm() / (2.0 * a);
    b.c0 = a / (2.0 * (R + a));
    b.prefactor_ev = -geom.thermal_energy_ev() / (8.0 * std::pow(a, 3)) *
                     std::sqrt(R / (R + a));
    return engine(geom, b, material, particle, settings);
}

FreeEnergyResult free_energy(const ThermalGeometry& geom, const BodyGeometry& body,
                             const PermittivityModel& material,
                             const OscillatorModel& particle,
                             const FreeEnergySettings& settings, bool allow_outside_pfa) {
    return std::visit(
        [&](const auto& g) -> FreeEnergyResult {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, PlateGeometry>)
                return free_energy_plate(geom, material, g.thickness_nm, particle, settings);
            else if constexpr (std::is_same_v<T, SemispaceGeometry>)
                return free_energy_semispace(geom, material, particle, settings);
            else
                return free_energy_cylinder(geom, g, material, particle, settings,
                                            allow_outside_pfa);
        },
        body);
}

}  // namespace casipol
