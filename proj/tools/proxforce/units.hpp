#pragma once

#include <string>
#include <string_view>

namespace proxforce::cli {

/// Parses a length with optional suffix (nm, um, mm, cm, m; also "μm").
/// A bare number is metres. "inf" parses to +infinity when allowed.
double parse_length(std::string_view text, bool allow_infinite = false);

/// Parses a plain real number (densities, alpha, tolerances).
double parse_number(std::string_view text);

/// Shortest decimal string that round-trips to the same binary64 value.
std::string format_double(double value);

}  // namespace proxforce::cli
