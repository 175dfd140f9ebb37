#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace proxforce {

enum class Method { Exact, PfaGeneral, PfaSimple, OracleMc, OracleQuad };

std::string_view to_string(Method m) noexcept;

/// A named dimensionless (or SI) side value, e.g. an applicability ratio.
struct Diagnostic {
  std::string name;
  double value;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Signed force (N), pressure (Pa) or energy per area (J/m^2) together with
/// the method that produced it and the method's own error estimate.
struct ForceResult {
  double value = 0.0;
  Method method = Method::Exact;
  double error_estimate = 0.0;
  std::vector<Diagnostic> diagnostics;

  std::optional<double> diagnostic(std::string_view name) const;
  ForceResult& with(std::string name, double value);
};

}  // namespace proxforce
