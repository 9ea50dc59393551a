#include "casipol/kramers_kronig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "casipol/quadrature.hpp"

namespace casipol {

namespace {

// eps'' on one tabulated segment, either a power law through both
// endpoints (log-log linear) or, when an endpoint vanishes, linear.
struct Segment {
    double wa, wb;
    double ea, eb;
    bool power_law;
    double p = 0.0;  // exponent when power_law

    double eval(double w) const {
        if (power_law) return ea * std::pow(w / wa, p);
        return ea + (eb - ea) * (w - wa) / (wb - wa);
    }
};

Segment make_segment(const OpticalRow& a, const OpticalRow& b) {
    Segment s{a.energy_ev, b.energy_ev, a.eps_imag(), b.eps_imag(), false, 0.0};
    if (s.ea > 0.0 && s.eb > 0.0) {
        s.power_law = true;
        s.p = std::log(s.eb / s.ea) / std::log(s.wb / s.wa);
        s.p = std::clamp(s.p, -60.0, 60.0);
    }
    return s;
}

// integral over [alpha, beta] of omega eps''(omega) / (omega^2 + xi^2),
// in log space away from xi and via u = omega^2 near it.
double piece_integral(const Segment& s, double alpha, double beta, double xi,
                      const KkSettings& kk) {
    if (beta <= alpha) return 0.0;
    bool near_xi = xi > 0.0 && beta >= xi / 3.0 && alpha <= 3.0 * xi;
    double total = 0.0;
    int parts = std::max(1, kk.resolution);
    if (near_xi) {
        double ua = alpha * alpha, ub = beta * beta;
        auto f = [&](double u) {
            double w = std::sqrt(u);
            return 0.5 * s.eval(w) / (u + xi * xi);
        };
        double du = (ub - ua) / parts;
        for (int i = 0; i < parts; ++i)
            total += adaptive_simpson(f, ua + i * du, ua + (i + 1) * du, kk.rel_tol,
                                      kk.max_depth);
    } else {
        double xa = std::log(alpha), xb = std::log(beta);
        auto f = [&](double x) {
            double w = std::exp(x);
            return w * w * s.eval(w) / (w * w + xi * xi);
        };
        double dx = (xb - xa) / parts;
        for (int i = 0; i < parts; ++i)
            total += adaptive_simpson(f, xa + i * dx, xa + (i + 1) * dx, kk.rel_tol,
                                      kk.max_depth);
    }
    return total;
}

double segment_integral(const Segment& s, double xi, const KkSettings& kk) {
    if (s.ea == 0.0 && s.eb == 0.0) return 0.0;
    if (xi > s.wa && xi < s.wb)
        return piece_integral(s, s.wa, xi, xi, kk) + piece_integral(s, xi, s.wb, xi, kk);
    return piece_integral(s, s.wa, s.wb, xi, kk);
}

// Low-frequency Drude tail eps'' = A/omega on (0, w1]:
//   integral = A * atan(w1/xi) / xi ; diverges at xi = 0.
double drude_tail_integral(double amplitude, double w1, double xi) {
    if (amplitude == 0.0) return 0.0;
    if (xi == 0.0) return std::numeric_limits<double>::infinity();
    return amplitude * std::atan(w1 / xi) / xi;
}

// Low-frequency constant tail eps'' = C on [cutoff, w1].
double constant_tail_integral(double c, double cutoff, double w1, double xi) {
    if (c == 0.0 || cutoff >= w1) return 0.0;
    return 0.5 * c * std::log((w1 * w1 + xi * xi) / (cutoff * cutoff + xi * xi));
}

// High-frequency tail eps'' = B/omega^3 on [W, inf):
//   B * integral dw / (w^2 (w^2 + xi^2)), series-expanded for xi << W.
double inverse_cube_tail_integral(double b, double W, double xi) {
    if (b == 0.0) return 0.0;
    double u = xi / W;
    if (u < 1e-2) {
        double u2 = u * u;
        return b / (W * W * W) *
               (1.0 / 3.0 - u2 / 5.0 + u2 * u2 / 7.0 - u2 * u2 * u2 / 9.0);
    }
    return b / (xi * xi) * (1.0 / W - std::atan(u) / xi);
}

}  // namespace

double kramers_kronig(const OpticalAxisTable& table, double xi_ev,
                      const ExtrapolationSpec& extrap, const KkSettings& settings) {
    if (xi_ev < 0.0) throw std::invalid_argument("kramers_kronig: xi must be >= 0");

    const auto& rows = table.rows();
    double acc = 0.0;

    switch (extrap.low) {
        case LowFreqExtrapolation::None:
            break;
        case LowFreqExtrapolation::DrudeTail: {
            // Geometric-mean fit of A in eps'' = A/omega to the lowest two points.
            double a1 = rows[0].eps_imag() * rows[0].energy_ev;
            double a2 = rows[1].eps_imag() * rows[1].energy_ev;
            double amplitude = std::sqrt(a1 * a2);
            double tail = drude_tail_integral(amplitude, rows[0].energy_ev, xi_ev);
            if (std::isinf(tail)) return std::numeric_limits<double>::infinity();
            acc += tail;
            break;
        }
        case LowFreqExtrapolation::Constant: {
            if (!(extrap.low_cutoff_ev > 0.0))
                throw std::invalid_argument("kramers_kronig: constant tail needs cutoff > 0");
            acc += constant_tail_integral(rows[0].eps_imag(), extrap.low_cutoff_ev,
                                          rows[0].energy_ev, xi_ev);
            break;
        }
    }

    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        acc += segment_integral(make_segment(rows[i], rows[i + 1]), xi_ev, settings);

    if (extrap.high == HighFreqExtrapolation::InverseCube) {
        const OpticalRow& last = rows.back();
        double b = last.eps_imag() * std::pow(last.energy_ev, 3);
        acc += inverse_cube_tail_integral(b, last.energy_ev, xi_ev);
    }

    return 1.0 + 2.0 / std::numbers::pi * acc;
}

}  // namespace casipol
