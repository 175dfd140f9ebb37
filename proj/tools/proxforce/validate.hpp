#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace proxforce::cli {

enum class Suite { Gravity, Yukawa, Layered, All };

std::optional<Suite> parse_suite(std::string_view name);

/// One line of the validation report.
struct Check {
  std::string suite;
  std::string name;
  std::string relation;  // what was measured, in words
  double value = 0.0;
  std::string comparison;  // "<=", "==", ...
  double bound = 0.0;
  bool pass = false;
  int criterion = 0;  // acceptance criterion this check backs
};

/// Runs the checks of a suite. Results depend only on (suite, seed), never
/// on `jobs`.
std::vector<Check> run_checks(Suite suite, std::uint64_t seed, unsigned jobs);

std::string format_check(const Check& c);

/// Prints the report and a summary line; true iff every check passed.
bool run_validation(Suite suite, std::uint64_t seed, unsigned jobs, std::ostream& out);

}  // namespace proxforce::cli
