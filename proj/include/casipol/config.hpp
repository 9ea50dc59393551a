#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace casipol {

// Flat key-value configuration with [section] headers, '#' comments and
// one `key = value` pair per line. Sections and keys are kept in sorted
// order so serialization is deterministic; run manifests reuse this
// format and can be fed back as configs.
class Config {
  public:
    static Config parse(std::istream& in, const std::string& source_name);
    static Config parse_file(const std::string& path);

    void set(const std::string& section, const std::string& key, std::string value);
    void set_double(const std::string& section, const std::string& key, double value);
    bool has(const std::string& section, const std::string& key) const;

    std::optional<std::string> get(const std::string& section,
                                   const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    std::string require(const std::string& section, const std::string& key) const;

    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    long get_long(const std::string& section, const std::string& key,
                  long fallback) const;

    // Entries of `other` override entries of this config.
    void merge_from(const Config& other);

    std::string serialize() const;
    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return sections_;
    }

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace casipol
