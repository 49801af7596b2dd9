#include "cli/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dualrail/errors.hpp"
#include "dualrail/format.hpp"

namespace dualrail::cli {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string json_scalar_to_string(const nlohmann::json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    if (value.is_number()) return format_g17(value.get<double>());
    throw ConfigError("unsupported JSON value type: " + value.dump());
}

}  // namespace

std::vector<std::string> split_tokens(const std::string& value) {
    std::istringstream in(value);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

ConfigMap ConfigMap::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_json_text(text);
    }
    return parse_text(text);
}

ConfigMap ConfigMap::parse_text(const std::string& text) {
    ConfigMap config;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) {
                throw ConfigError("config line " + std::to_string(line_no) + ": empty section");
            }
            config.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        }
        if (section.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": key outside any [section]");
        }
        config.sections_[section].emplace_back(key, value);
    }
    return config;
}

ConfigMap ConfigMap::parse_json_text(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON config: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("JSON config must be an object of sections");
    }
    ConfigMap config;
    for (const auto& [section, body] : root.items()) {
        if (!body.is_object()) {
            throw ConfigError("JSON section '" + section + "' must be an object");
        }
        auto& entries = config.sections_[section];
        for (const auto& [key, value] : body.items()) {
            if (value.is_array()) {
                // An array of scalars is one space-joined value; an array of
                // arrays becomes one entry per row (edge lists).
                bool nested = !value.empty() && value.front().is_array();
                if (nested) {
                    for (const auto& row : value) {
                        std::string joined;
                        for (const auto& item : row) {
                            if (!joined.empty()) joined += " ";
                            joined += json_scalar_to_string(item);
                        }
                        entries.emplace_back(key, joined);
                    }
                } else {
                    std::string joined;
                    for (const auto& item : value) {
                        if (!joined.empty()) joined += " ";
                        joined += json_scalar_to_string(item);
                    }
                    entries.emplace_back(key, joined);
                }
            } else {
                entries.emplace_back(key, json_scalar_to_string(value));
            }
        }
    }
    return config;
}

void ConfigMap::validate_schema(const std::set<std::string>& allowed) const {
    for (const auto& [section, entries] : sections_) {
        bool section_known = false;
        for (const auto& name : allowed) {
            if (name.rfind(section + ".", 0) == 0) {
                section_known = true;
                break;
            }
        }
        if (!section_known) {
            throw ConfigError("unknown config section '" + section + "'");
        }
        for (const auto& [key, value] : entries) {
            if (!allowed.count(section + "." + key)) {
                throw ConfigError("unknown config key '" + section + "." + key + "'");
            }
        }
    }
}

bool ConfigMap::has_section(const std::string& section) const {
    return sections_.count(section) > 0;
}

bool ConfigMap::has(const std::string& section, const std::string& key) const {
    return find(section, key) != nullptr;
}

const std::string* ConfigMap::find(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    if (it == sections_.end()) return nullptr;
    const std::string* result = nullptr;
    for (const auto& [k, v] : it->second) {
        if (k == key) result = &v;  // last assignment wins
    }
    return result;
}

std::string ConfigMap::get_string(const std::string& section, const std::string& key,
                                  const std::string& fallback) const {
    const std::string* v = find(section, key);
    return v ? *v : fallback;
}

double ConfigMap::get_double(const std::string& section, const std::string& key,
                             double fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    try {
        return parse_double(*v);
    } catch (const ConfigError&) {
        throw ConfigError("config key '" + section + "." + key + "': not a number: '" + *v + "'");
    }
}

int ConfigMap::get_int(const std::string& section, const std::string& key, int fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    try {
        return static_cast<int>(parse_long(*v));
    } catch (const ConfigError&) {
        throw ConfigError("config key '" + section + "." + key + "': not an integer: '" + *v +
                          "'");
    }
}

bool ConfigMap::get_bool(const std::string& section, const std::string& key,
                         bool fallback) const {
    const std::string* v = find(section, key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw ConfigError("config key '" + section + "." + key + "': not a boolean: '" + *v + "'");
}

std::vector<std::string> ConfigMap::get_all(const std::string& section,
                                            const std::string& key) const {
    std::vector<std::string> values;
    const auto it = sections_.find(section);
    if (it == sections_.end()) return values;
    for (const auto& [k, v] : it->second) {
        if (k == key) values.push_back(v);
    }
    return values;
}

std::vector<double> ConfigMap::get_doubles(const std::string& section,
                                           const std::string& key) const {
    std::vector<double> values;
    const std::string* v = find(section, key);
    if (!v) return values;
    for (const auto& tok : split_tokens(*v)) {
        values.push_back(parse_double(tok));
    }
    return values;
}

std::vector<int> ConfigMap::get_ints(const std::string& section, const std::string& key) const {
    std::vector<int> values;
    const std::string* v = find(section, key);
    if (!v) return values;
    for (const auto& tok : split_tokens(*v)) {
        values.push_back(static_cast<int>(parse_long(tok)));
    }
    return values;
}

}  // namespace dualrail::cli
