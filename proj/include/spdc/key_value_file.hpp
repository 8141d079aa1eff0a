#pragma once

#include "spdc/errors.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spdc {

/// Minimal INI-style file: `[section]` headers, `key = value` lines,
/// `#` comments. Section and key names are case-sensitive.
class KeyValueFile {
public:
    static KeyValueFile parse_file(const std::filesystem::path& path);
    static KeyValueFile parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has_section(const std::string& section) const;
    std::vector<std::string> section_names() const;

    std::optional<std::string> get(const std::string& section, const std::string& key) const;

    /// Required accessors throw ConfigError naming file, section and key.
    std::string require(const std::string& section, const std::string& key) const;
    double require_double(const std::string& section, const std::string& key) const;
    std::optional<double> get_double(const std::string& section, const std::string& key) const;
    std::vector<double> require_doubles(const std::string& section, const std::string& key) const;

    const std::string& origin() const { return origin_; }

private:
    std::string origin_;
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

} // namespace spdc
