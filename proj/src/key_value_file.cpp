#include "spdc/key_value_file.hpp"

#include <fstream>
#include <sstream>

namespace spdc {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

} // namespace

KeyValueFile KeyValueFile::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path.string());
}

KeyValueFile KeyValueFile::parse_string(const std::string& text, const std::string& origin) {
    KeyValueFile kv;
    kv.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
            kv.sections_[section]; // register even if empty
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        kv.sections_[section][key] = value;
    }
    return kv;
}

bool KeyValueFile::has_section(const std::string& section) const {
    return sections_.count(section) != 0;
}

std::vector<std::string> KeyValueFile::section_names() const {
    std::vector<std::string> names;
    names.reserve(sections_.size());
    for (const auto& [name, _] : sections_)
        names.push_back(name);
    return names;
}

std::optional<std::string> KeyValueFile::get(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    if (sec == sections_.end())
        return std::nullopt;
    const auto it = sec->second.find(key);
    if (it == sec->second.end())
        return std::nullopt;
    return it->second;
}

std::string KeyValueFile::require(const std::string& section, const std::string& key) const {
    auto v = get(section, key);
    if (!v)
        throw ConfigError(origin_ + ": missing [" + section + "] " + key);
    return *v;
}

double KeyValueFile::require_double(const std::string& section, const std::string& key) const {
    const std::string raw = require(section, key);
    try {
        size_t pos = 0;
        const double v = std::stod(raw, &pos);
        if (trim(raw.substr(pos)).empty())
            return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(origin_ + ": [" + section + "] " + key + " is not a number: '" + raw + "'");
}

std::optional<double> KeyValueFile::get_double(const std::string& section, const std::string& key) const {
    if (!get(section, key))
        return std::nullopt;
    return require_double(section, key);
}

std::vector<double> KeyValueFile::require_doubles(const std::string& section, const std::string& key) const {
    const std::string raw = require(section, key);
    std::istringstream in(raw);
    std::vector<double> out;
    double v;
    while (in >> v)
        out.push_back(v);
    std::string rest;
    if (in.fail() && !in.eof() && in >> rest)
        throw ConfigError(origin_ + ": [" + section + "] " + key + " has a non-numeric entry");
    if (out.empty())
        throw ConfigError(origin_ + ": [" + section + "] " + key + " is empty");
    return out;
}

} // namespace spdc
