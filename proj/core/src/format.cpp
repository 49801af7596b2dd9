#include "dualrail/format.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "dualrail/errors.hpp"

namespace dualrail {

std::string format_g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double parse_double(const std::string& token) {
    if (token.empty()) {
        throw ConfigError("expected a number, got an empty token");
    }
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || errno == ERANGE || !std::isfinite(value)) {
        throw ConfigError("not a finite number: '" + token + "'");
    }
    return value;
}

long parse_long(const std::string& token) {
    if (token.empty()) {
        throw ConfigError("expected an integer, got an empty token");
    }
    errno = 0;
    char* end = nullptr;
    const long value = std::strtol(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || errno == ERANGE) {
        throw ConfigError("not an integer: '" + token + "'");
    }
    return value;
}

}  // namespace dualrail
