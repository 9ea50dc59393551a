#include "casipol/optical_table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace casipol {

OpticalAxisTable::OpticalAxisTable(std::vector<OpticalRow> rows, std::string name)
    : rows_(std::move(rows)), name_(std::move(name)) {
    if (rows_.size() < 2)
        throw std::runtime_error("optical table '" + name_ + "': needs at least 2 rows");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const OpticalRow& r = rows_[i];
        std::string where = "optical table '" + name_ + "' row " + std::to_string(i + 1);
        if (!(r.energy_ev > 0.0)) throw std::runtime_error(where + ": energy must be > 0");
        if (!(r.n > 0.0)) throw std::runtime_error(where + ": refractive index must be > 0");
        if (r.k < 0.0) throw std::runtime_error(where + ": extinction coefficient must be >= 0");
        if (i > 0 && !(r.energy_ev > rows_[i - 1].energy_ev))
            throw std::runtime_error(where + ": non-monotone grid (energies must be strictly increasing)");
    }
}

OpticalAxisTable load_optical_axis(std::istream& in, const std::string& name) {
    std::vector<OpticalRow> rows;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double e, n, k;
        if (!(ls >> e)) continue;  // blank or comment-only line
        if (!(ls >> n >> k))
            throw std::runtime_error("optical table '" + name + "' line " +
                                     std::to_string(line_no) +
                                     ": expected 3 numeric columns (energy_eV, n, k)");
        double trailing;
        if (ls >> trailing)
            throw std::runtime_error("optical table '" + name + "' line " +
                                     std::to_string(line_no) + ": more than 3 columns");
        rows.push_back({e, n, k});
    }
    return OpticalAxisTable(std::move(rows), name);
}

OpticalAxisTable load_optical_axis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open optical table file: " + path);
    return load_optical_axis(in, path);
}

OpticalDataTable load_optical_table(std::istream& x_in, std::istream& z_in) {
    OpticalDataTable t;
    t.x = load_optical_axis(x_in, "x");
    t.z = load_optical_axis(z_in, "z");
    return t;
}

OpticalDataTable load_optical_table_files(const std::string& x_path,
                                          const std::string& z_path) {
    OpticalDataTable t;
    t.x = load_optical_axis_file(x_path);
    t.z = load_optical_axis_file(z_path);
    return t;
}

}  // namespace casipol
