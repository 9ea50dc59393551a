#pragma once

#include <string>

#include "casipol/scenarios.hpp"

namespace casipol {

// Renders a scenario table in the documented text format: '#'-prefixed
// header lines (title, version, manifest digest, columns, units), then
// one delimiter-separated numeric row per line with 12 significant
// digits. Byte-deterministic for identical inputs.
std::string render_table(const ScenarioTable& table, const std::string& title,
                         const std::string& manifest_digest);

void write_text_file(const std::string& path, const std::string& content);
std::string format_number(double value);  // 12 significant digits

}  // namespace casipol
