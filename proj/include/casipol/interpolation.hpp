#pragma once

#include <vector>

namespace casipol {

// Monotone piecewise-cubic (PCHIP, Fritsch-Carlson) interpolant. Preserves
// monotonicity of the data; C1; deterministic.
class PchipInterpolant {
  public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    bool empty() const { return x_.empty(); }
    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }
    double y_front() const { return y_.front(); }
    double y_back() const { return y_.back(); }
    // Endpoint derivative, for linear extension beyond the grid.
    double slope_front() const { return m_.front(); }
    double slope_back() const { return m_.back(); }

  private:
    std::vector<double> x_, y_, m_;
};

}  // namespace casipol
