#pragma once

// Brute-force validators for the closed forms. Nothing here calls the
// closed sphere results; the only shared step is the point-plate force.
//
// Geometry is axisymmetric about the z axis: body1 is always a slab whose
// upper face sits at `top`, body2 (a ball or another slab) lies above it.

#include <cstdint>
#include <optional>

#include "proxforce/force_result.hpp"
#include "proxforce/geometry.hpp"
#include "proxforce/quadrature.hpp"

namespace proxforce {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

enum class KernelKind { Gravity, Yukawa };

/// Two-body interaction between unit point masses.
class PairKernel {
 public:
  static PairKernel gravity(double G = kNewtonG);
  static PairKernel yukawa(const YukawaParams& p, double G = kNewtonG);

  KernelKind kind() const noexcept { return kind_; }
  double G() const noexcept { return G_; }
  double alpha() const noexcept { return alpha_; }
  double lambda() const noexcept { return lambda_; }

  /// Potential energy of unit masses at distance d.
  double potential(double d) const;
  /// z-component of the force on the mass at p2 exerted by the one at p1.
  double force_z(const Vec3& p1, const Vec3& p2) const;
  /// Force on a unit mass a height h above the face of a unit-density
  /// slab restricted to |lateral offset| > cutoff, thickness `depth`.
  /// Closed form; used to add back what a truncated sample volume misses.
  double slab_tail_force(double h, double depth, double cutoff) const;
  /// Force on a unit mass at height h from the whole unit-density slab of
  /// the given thickness (may be infinite for Yukawa).
  double point_slab_force(double h, const Thickness& thickness) const;

 private:
  PairKernel(KernelKind kind, double G, double alpha, double lambda)
      : kind_(kind), G_(G), alpha_(alpha), lambda_(lambda) {}

  KernelKind kind_;
  double G_;
  double alpha_;
  double lambda_;
};

enum class BodyShape { Slab, Ball };

class SolidBody {
 public:
  /// Slab with its upper face at z = top. `lateral_cutoff` bounds the
  /// sampled disk for Monte Carlo; absent means "choose a default" (only
  /// allowed for Yukawa).
  static SolidBody slab(double density, Thickness thickness, double top,
                        std::optional<double> lateral_cutoff = std::nullopt);
  static SolidBody ball(double density, double radius, double centre_z);

  BodyShape shape() const noexcept { return shape_; }
  double density() const noexcept { return density_; }
  const Thickness& thickness() const noexcept { return thickness_; }
  double top() const noexcept { return top_; }
  double bottom() const;
  std::optional<double> lateral_cutoff() const noexcept { return cutoff_; }
  double radius() const noexcept { return radius_; }
  double centre_z() const noexcept { return centre_; }

 private:
  SolidBody() : thickness_(Thickness::infinite()) {}

  BodyShape shape_ = BodyShape::Slab;
  double density_ = 0.0;
  Thickness thickness_;
  double top_ = 0.0;
  std::optional<double> cutoff_;
  double radius_ = 0.0;
  double centre_ = 0.0;
};

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  bool stratified = false;
  /// Worker threads; the result does not depend on this.
  unsigned jobs = 1;
};

/// Force on body2 by 1-D quadrature over its height, weighting the exact
/// point-plate force by the cross-section area. For slab-over-slab the
/// area is pi L^2 of the upper slab's cutoff, or 1 m^2 (a pressure) when
/// it has none.
ForceResult oracle_quad_force(const SolidBody& body1, const SolidBody& body2,
                              const PairKernel& kernel,
                              const QuadratureConfig& quad = {});

/// Monte Carlo estimate of rho1 rho2 \iint k dV1 dV2. The slab is sampled in
/// a cylinder of radius L centred under each body2 sample (exact by lateral
/// translation invariance) and the part beyond L, or below the sampled
/// depth, is added analytically per sample. Reports the standard error of
/// the mean. Bit-identical for a fixed seed regardless of `jobs`.
ForceResult oracle_mc_force(const SolidBody& body1, const SolidBody& body2,
                            const PairKernel& kernel, const McConfig& mc);

/// Nested quadrature of the pair potential over a slab (thickness may be
/// infinite): energy of a unit mass at height h above a unit-density slab.
double oracle_point_slab_energy(const PairKernel& kernel, double h,
                                const Thickness& thickness,
                                const QuadratureConfig& quad = {});

/// Nested quadrature of the pair force over a slab; unit mass, unit density.
double oracle_point_slab_force(const PairKernel& kernel, double h,
                               const Thickness& thickness,
                               const QuadratureConfig& quad = {});

/// Energy per unit area between unit-density slabs a apart, by integrating
/// oracle_point_slab_energy over the upper slab's thickness.
double oracle_slab_slab_energy(const PairKernel& kernel, double a,
                               const Thickness& lower,
                               const Thickness& upper,
                               const QuadratureConfig& quad = {});

}  // namespace proxforce
