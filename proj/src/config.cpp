#include "casipol/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace casipol {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::parse(std::istream& in, const std::string& source_name) {
    Config cfg;
    std::string line, section;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw std::runtime_error(source_name + " line " + std::to_string(line_no) +
                                         ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw std::runtime_error(source_name + " line " + std::to_string(line_no) +
                                         ": empty section name");
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(source_name + " line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error(source_name + " line " + std::to_string(line_no) +
                                     ": empty key");
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse(in, path);
}

void Config::set(const std::string& section, const std::string& key, std::string value) {
    sections_[section][key] = std::move(value);
}

void Config::set_double(const std::string& section, const std::string& key,
                        double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    set(section, key, buf);
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
}

std::optional<std::string> Config::get(const std::string& section,
                                       const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second;
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    auto v = get(section, key);
    return v ? *v : fallback;
}

std::string Config::require(const std::string& section, const std::string& key) const {
    auto v = get(section, key);
    if (!v)
        throw std::runtime_error("config: missing required key [" + section + "] " + key);
    return *v;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    try {
        size_t pos = 0;
        double d = std::stod(*v, &pos);
        if (pos != v->size()) throw std::invalid_argument("trailing");
        return d;
    } catch (const std::exception&) {
        throw std::runtime_error("config: [" + section + "] " + key +
                                 " is not a number: '" + *v + "'");
    }
}

long Config::get_long(const std::string& section, const std::string& key,
                      long fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    try {
        size_t pos = 0;
        long n = std::stol(*v, &pos);
        if (pos != v->size()) throw std::invalid_argument("trailing");
        return n;
    } catch (const std::exception&) {
        throw std::runtime_error("config: [" + section + "] " + key +
                                 " is not an integer: '" + *v + "'");
    }
}

void Config::merge_from(const Config& other) {
    for (const auto& [section, entries] : other.sections_)
        for (const auto& [key, value] : entries) sections_[section][key] = value;
}

std::string Config::serialize() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [section, entries] : sections_) {
        if (!first) os << "\n";
        first = false;
        os << "[" << section << "]\n";
        for (const auto& [key, value] : entries) os << key << " = " << value << "\n";
    }
    return os.str();
}

}  // namespace casipol
