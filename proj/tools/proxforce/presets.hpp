#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace proxforce::cli {

/// Geometry of a coated sphere-plate experiment. Densities are never part
/// of a preset and must be supplied by the user.
struct Preset {
  std::string_view name;
  double radius;          // R
  double plate_inner;     // first plate coating layer (on the substrate)
  double plate_outer;     // outer plate coating layer
  double sphere_inner;
  double sphere_outer;
  double plate_thickness; // D1
  double lambda;          // default interaction range
};

std::span<const Preset> presets();
std::optional<Preset> find_preset(std::string_view name);

}  // namespace proxforce::cli
