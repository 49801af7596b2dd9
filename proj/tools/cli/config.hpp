#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace dualrail::cli {

/// Section -> ordered (key, value) entries. Keys may repeat (edge lists).
/// Parsed from the flat key = value format or from an equivalent JSON
/// object of objects; both normalize to the same map.
class ConfigMap {
public:
    static ConfigMap parse_file(const std::string& path);
    static ConfigMap parse_text(const std::string& text);
    static ConfigMap parse_json_text(const std::string& text);

    /// Rejects any section or key outside the schema. Values are a set of
    /// "section.key" names.
    void validate_schema(const std::set<std::string>& allowed) const;

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    int get_int(const std::string& section, const std::string& key, int fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

    /// All values stored under a repeated key, in file order.
    std::vector<std::string> get_all(const std::string& section, const std::string& key) const;

    /// Whitespace-separated numbers from one value.
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;
    std::vector<int> get_ints(const std::string& section, const std::string& key) const;

private:
    const std::string* find(const std::string& section, const std::string& key) const;

    std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections_;
};

std::vector<std::string> split_tokens(const std::string& value);

}  // namespace dualrail::cli
