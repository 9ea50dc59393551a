#include "casipol/table_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "casipol/version.hpp"

namespace casipol {

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", value);
    return buf;
}

std::string render_table(const ScenarioTable& table, const std::string& title,
                         const std::string& manifest_digest) {
    std::ostringstream os;
    os << "# casipol table: " << title << "\n";
    os << "# version: " << version << "\n";
    os << "# manifest: sha256:" << manifest_digest << "\n";
    os << "# columns:";
    for (const auto& c : table.columns) os << " " << c;
    os << "\n# units:";
    for (const auto& u : table.units) os << " " << u;
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << " ";
            os << format_number(row[i]);
        }
        os << "\n";
    }
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace casipol
