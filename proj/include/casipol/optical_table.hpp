#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace casipol {

// One row of tabulated optical constants: photon energy (eV), refractive
// index n and extinction coefficient k.
struct OpticalRow {
    double energy_ev;
    double n;
    double k;
    // Absorptive part of the permittivity, eps''(omega) = 2 n k.
    double eps_imag() const { return 2.0 * n * k; }
};

// Validated single-axis table: energies strictly increasing, n > 0,
// k >= 0, at least two rows.
class OpticalAxisTable {
  public:
    OpticalAxisTable(std::vector<OpticalRow> rows, std::string name);

    const std::vector<OpticalRow>& rows() const { return rows_; }
    const std::string& name() const { return name_; }
    double min_energy_ev() const { return rows_.front().energy_ev; }
    double max_energy_ev() const { return rows_.back().energy_ev; }

  private:
    std::vector<OpticalRow> rows_;
    std::string name_;
};

// Two-axis table for a uniaxial material. Either axis may be absent at
// load time; building a permittivity model requires both.
struct OpticalDataTable {
    std::optional<OpticalAxisTable> x;
    std::optional<OpticalAxisTable> z;
};

// Parses the documented text format: one row per line, three numeric
// columns (energy_eV, n, k) separated by commas or whitespace, '#'
// comments ignored. Throws std::runtime_error naming the offending line.
OpticalAxisTable load_optical_axis(std::istream& in, const std::string& name);
OpticalAxisTable load_optical_axis_file(const std::string& path);

// Loads both axes from separate streams or files.
OpticalDataTable load_optical_table(std::istream& x_in, std::istream& z_in);
OpticalDataTable load_optical_table_files(const std::string& x_path,
                                          const std::string& z_path);

}  // namespace casipol
