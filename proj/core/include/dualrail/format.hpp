#pragma once

#include <string>

namespace dualrail {

/// Formats a double with 17 significant digits ("%.17g"), enough to
/// round-trip any double bit-exactly through decimal text.
std::string format_g17(double value);

/// Strict parser: the whole token must be a finite double.
double parse_double(const std::string& token);

/// Strict parser: the whole token must be an integer.
long parse_long(const std::string& token);

}  // namespace dualrail
