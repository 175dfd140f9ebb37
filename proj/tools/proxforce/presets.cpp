#include "presets.hpp"

#include <array>

namespace proxforce::cli {

namespace {

constexpr std::array<Preset, 3> kPresets{{
    {"ref20", 294.3e-6, 1e-9, 200e-9, 1e-9, 203e-9, 3.5e-6, 0.1e-6},
    {"ref21-22", 148.7e-6, 10e-9, 150e-9, 10e-9, 200e-9, 3.5e-6, 0.1e-6},
    {"ref23", 151e-6, 10e-9, 210e-9, 10e-9, 180e-9, 3.5e-6, 0.1e-6},
}};

}  // namespace

std::span<const Preset> presets() { return kPresets; }

std::optional<Preset> find_preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace proxforce::cli
