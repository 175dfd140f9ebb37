#pragma once

// Material bodies and the sphere-plate gap profile.
//
// All quantities are SI: metres, kilograms, kg/m^3. Forces are reported as
// the z-component acting on the upper body; negative means attraction
// toward the plate.

#include <cmath>
#include <optional>
#include <vector>

namespace proxforce {

/// CODATA 2018 Newtonian constant of gravitation, m^3 kg^-1 s^-2.
inline constexpr double kNewtonG = 6.67430e-11;

/// exp(-x) with exact underflow to zero for x > 745.
inline double exp_neg(double x) noexcept {
  return x > 745.0 ? 0.0 : std::exp(-x);
}

/// A slab thickness that is either a finite positive length or the
/// distinguished INFINITE value. Formulas branch to their exact D -> inf
/// limit instead of evaluating a huge float.
class Thickness {
 public:
  static Thickness finite(double metres);
  static Thickness infinite() noexcept { return Thickness{}; }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws DomainError when infinite.
  double metres() const;

  /// 1 - exp(-D/lambda); exactly 1 for an infinite slab.
  double screening_factor(double lambda) const noexcept;

  friend bool operator==(const Thickness&, const Thickness&) = default;

 private:
  Thickness() = default;
  explicit Thickness(double m) : value_(m) {}
  std::optional<double> value_;
};

class Plate {
 public:
  Plate(double density, Thickness thickness);

  double density() const noexcept { return density_; }
  const Thickness& thickness() const noexcept { return thickness_; }

 private:
  double density_;
  Thickness thickness_;
};

class Sphere {
 public:
  Sphere(double density, double radius);

  double density() const noexcept { return density_; }
  double radius() const noexcept { return radius_; }
  double volume() const noexcept;

 private:
  double density_;
  double radius_;
};

class Layer {
 public:
  Layer(double thickness, double density);

  double thickness() const noexcept { return thickness_; }
  double density() const noexcept { return density_; }

 private:
  double thickness_;
  double density_;
};

/// A substrate coated with thin layers, innermost layer first. For a plate
/// the substrate extent is its thickness, for a sphere its radius.
class LayerStack {
 public:
  LayerStack(double substrate_density, Thickness substrate_extent,
             std::vector<Layer> layers = {});

  /// Sphere substrate; requires the layers to fit inside the radius.
  static LayerStack sphere(double substrate_density, double radius,
                           std::vector<Layer> layers = {});

  double substrate_density() const noexcept { return substrate_density_; }
  const Thickness& substrate_extent() const noexcept { return extent_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  double total_layer_thickness() const noexcept;
  /// Density of the outermost material (last layer, or the substrate).
  double surface_density() const noexcept;

 private:
  double substrate_density_;
  Thickness extent_;
  std::vector<Layer> layers_;
};

/// Closest-approach separation between the facing surfaces.
class Gap {
 public:
  explicit Gap(double separation);
  double separation() const noexcept { return a_; }

 private:
  double a_;
};

/// Strength alpha (relative to gravity, any sign) and range lambda > 0.
class YukawaParams {
 public:
  YukawaParams(double alpha, double lambda);

  double alpha() const noexcept { return alpha_; }
  double lambda() const noexcept { return lambda_; }

 private:
  double alpha_;
  double lambda_;
};

/// Local plate-plate separation under a sphere of radius R at closest
/// approach a, at radial distance r from the axis: a + R - sqrt(R^2 - r^2).
double sphere_gap(double r, double radius, double a);

/// Vertical chord of the sphere at radial distance r: 2 sqrt(R^2 - r^2).
double sphere_chord(double r, double radius);

}  // namespace proxforce
