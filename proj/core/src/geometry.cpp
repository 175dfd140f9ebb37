#include "proxforce/geometry.hpp"

#include <numbers>
#include <numeric>
#include <string>

#include "proxforce/errors.hpp"

namespace proxforce {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

void require_positive(double x, const char* what) {
  if (!positive_finite(x)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(x));
  }
}

}  // namespace

Thickness Thickness::finite(double metres) {
  require_positive(metres, "thickness");
  return Thickness(metres);
}

double Thickness::metres() const {
  if (!value_) throw DomainError("thickness is INFINITE");
  return *value_;
}

double Thickness::screening_factor(double lambda) const noexcept {
  if (!value_) return 1.0;
  return -std::expm1(-*value_ / lambda);
}

Plate::Plate(double density, Thickness thickness)
    : density_(density), thickness_(thickness) {
  require_positive(density, "plate density");
}

Sphere::Sphere(double density, double radius)
    : density_(density), radius_(radius) {
  require_positive(density, "sphere density");
  require_positive(radius, "sphere radius");
}

double Sphere::volume() const noexcept {
  return 4.0 / 3.0 * std::numbers::pi * radius_ * radius_ * radius_;
}

Layer::Layer(double thickness, double density)
    : thickness_(thickness), density_(density) {
  require_positive(thickness, "layer thickness");
  require_positive(density, "layer density");
}

LayerStack::LayerStack(double substrate_density, Thickness substrate_extent,
                       std::vector<Layer> layers)
    : substrate_density_(substrate_density),
      extent_(substrate_extent),
      layers_(std::move(layers)) {
  require_positive(substrate_density, "substrate density");
}

LayerStack LayerStack::sphere(double substrate_density, double radius,
                              std::vector<Layer> layers) {
  require_positive(radius, "sphere radius");
  LayerStack stack(substrate_density, Thickness::finite(radius),
                   std::move(layers));
  if (stack.total_layer_thickness() >= radius) {
    throw DomainError("sphere coating layers (" +
                      std::to_string(stack.total_layer_thickness()) +
                      " m) do not fit inside radius " + std::to_string(radius));
  }
  return stack;
}

double LayerStack::total_layer_thickness() const noexcept {
  return std::accumulate(
      layers_.begin(), layers_.end(), 0.0,
      [](double acc, const Layer& l) { return acc + l.thickness(); });
}

double LayerStack::surface_density() const noexcept {
  return layers_.empty() ? substrate_density_ : layers_.back().density();
}

Gap::Gap(double separation) : a_(separation) {
  require_positive(separation, "separation");
}

YukawaParams::YukawaParams(double alpha, double lambda)
    : alpha_(alpha), lambda_(lambda) {
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  require_positive(lambda, "Yukawa range lambda");
}

double sphere_gap(double r, double radius, double a) {
  require_positive(radius, "radius");
  require_positive(a, "separation");
  const double chord_half = 0.5 * sphere_chord(r, radius);
  // R - sqrt(R^2 - r^2) without cancellation near the axis.
  return a + r * r / (radius + chord_half);
}

double sphere_chord(double r, double radius) {
  require_positive(radius, "radius");
  if (!(r >= 0.0 && r <= radius)) {
    throw DomainError("radial coordinate " + std::to_string(r) +
                      " outside [0, R]");
  }
  return 2.0 * std::sqrt((radius - r) * (radius + r));
}

}  // namespace proxforce
