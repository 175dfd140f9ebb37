#include "proxforce/pfa.hpp"

#include <cmath>
#include <numbers>

#include "proxforce/errors.hpp"

namespace proxforce {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Exact:
      return "exact";
    case Method::PfaGeneral:
      return "pfa-general";
    case Method::PfaSimple:
      return "pfa-simple";
    case Method::OracleMc:
      return "mc";
    case Method::OracleQuad:
      return "quad-oracle";
  }
  return "unknown";
}

std::optional<double> ForceResult::diagnostic(std::string_view name) const {
  for (const auto& d : diagnostics) {
    if (d.name == name) return d.value;
  }
  return std::nullopt;
}

ForceResult& ForceResult::with(std::string name, double value) {
  diagnostics.push_back(Diagnostic{std::move(name), value});
  return *this;
}

AxisymmetricGap AxisymmetricGap::sphere(double radius, double a) {
  // Validate eagerly so bad geometry fails before any quadrature runs.
  (void)sphere_gap(0.0, radius, a);
  return AxisymmetricGap{
      [radius, a](double r) { return sphere_gap(r, radius, a); },
      [radius](double r) { return sphere_chord(r, radius); },
      radius,
  };
}

CurvatureData::CurvatureData(double rx_, double ry_) : rx(rx_), ry(ry_) {
  if (!(rx > 0.0) || !(ry > 0.0) || !std::isfinite(rx) || !std::isfinite(ry)) {
    throw DomainError("principal radii of curvature must be positive");
  }
}

double CurvatureData::mean_radius() const noexcept {
  return std::sqrt(rx * ry);
}

ForceResult pfa_general(const PressureProfile& profile,
                        const AxisymmetricGap& gap,
                        const QuadratureConfig& quad) {
  if (!profile.pressure || !gap.gap || !gap.thickness) {
    throw DomainError("pressure profile and gap functions must be set");
  }
  auto integrand = [&](double r) {
    return 2.0 * std::numbers::pi * r *
           profile.pressure(gap.gap(r), gap.thickness(r));
  };
  const Integral integral = integrate_radial(integrand, gap.r_max, quad);
  ForceResult out{integral.value, Method::PfaGeneral, integral.error, {}};
  out.with("quadrature_evaluations", static_cast<double>(integral.evaluations));
  return out;
}

ForceResult pfa_simple(const std::function<double(double a)>& energy_per_area,
                       const CurvatureData& curvature, double a, Decay decay) {
  if (decay == Decay::NonDecaying) {
    throw PreconditionViolation(
        "simplified PFA F = 2 pi R E(a) is inapplicable: the plate-plate "
        "pressure does not drop to zero within the body (e.g. Newtonian "
        "gravity, whose pressure is independent of separation); use the "
        "general PFA integral instead");
  }
  if (!(a > 0.0)) throw DomainError("separation must be positive");
  const double rbar = curvature.mean_radius();
  return ForceResult{2.0 * std::numbers::pi * rbar * energy_per_area(a),
                     Method::PfaSimple, 0.0, {}};
}

}  // namespace proxforce
