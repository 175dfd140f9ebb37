#pragma once

// Yukawa-type correction to Newtonian gravity,
//   V(r) = -G m1 m2 alpha exp(-r / lambda) / r,
// between point masses, plates and balls, together with the thin-layer
// algebra for coated test bodies.

#include <vector>

#include "proxforce/force_result.hpp"
#include "proxforce/geometry.hpp"
#include "proxforce/gravity.hpp"
#include "proxforce/pfa.hpp"
#include "proxforce/quadrature.hpp"

namespace proxforce {

/// Pair potential energy in J. Throws DomainError for distance <= 0.
double yukawa_pair_potential(double distance, double m1, double m2,
                             const YukawaParams& p, double G = kNewtonG);

/// Energy of a point mass at height z above a plate:
///   -2 pi G m rho1 alpha lambda^2 e^{-z/lambda} (1 - e^{-D1/lambda}).
double yukawa_point_plate_energy(const PointMass& m, const Plate& plate,
                                 const YukawaParams& p, double G = kNewtonG);

/// -dE/dz of yukawa_point_plate_energy.
double yukawa_point_plate_force(const PointMass& m, const Plate& plate,
                                const YukawaParams& p, double G = kNewtonG);

/// Finite-size factor of the ball,
///   Phi(x) = 1 - x + e^{-2/x} (1 + x),  x = lambda / R,
/// evaluated without cancellation for large x (Phi ~ 2/(3 x^2)).
double sphere_finite_size_factor(double lambda_over_r);

/// Exact sphere-plate force from pairwise summation:
///   -4 pi^2 G rho1 rho2 alpha lambda^3 (1 - e^{-D1/lambda}) R e^{-a/lambda} Phi.
double yukawa_sphere_plate_force_exact(const Sphere& sphere,
                                       const Plate& plate, const Gap& gap,
                                       const YukawaParams& p,
                                       double G = kNewtonG);

double yukawa_plate_plate_pressure(const Plate& lower, const Plate& upper,
                                   const Gap& gap, const YukawaParams& p,
                                   double G = kNewtonG);

/// Energy per unit area, J/m^2.
double yukawa_plate_plate_energy(const Plate& lower, const Plate& upper,
                                 const Gap& gap, const YukawaParams& p,
                                 double G = kNewtonG);

/// Plate-plate pressure as a PFA profile (z, d2) -> Pa. Tagged DECAYING.
PressureProfile yukawa_plate_profile(const Plate& lower, double upper_density,
                                     const YukawaParams& p,
                                     double G = kNewtonG);

/// General PFA by radial quadrature over the sphere's gap and chord.
ForceResult yukawa_sphere_plate_force_pfa_general(
    const Sphere& sphere, const Plate& plate, const Gap& gap,
    const YukawaParams& p, const QuadratureConfig& quad = {},
    double G = kNewtonG);

/// Simplified PFA, 2 pi R E(a) against an infinitely thick upper plate of
/// the sphere's density. Never rejects; reports lambda_over_R and the
/// finite-size factor so misuse outside lambda << R is visible.
ForceResult yukawa_sphere_plate_force_pfa_simple(const Sphere& sphere,
                                                 const Plate& plate,
                                                 const Gap& gap,
                                                 const YukawaParams& p,
                                                 double G = kNewtonG);

// ---------------------------------------------------------------------------
// Layered bodies. Both formulas drop the substrate factor e^{-D1/lambda}
// (substrates are treated as thick compared with lambda) and report it as
// the diagnostic `plate_substrate_exp`.

/// Coated plate below a coated sphere. The sphere stack's substrate extent
/// is the radius; the separation is between the outermost surfaces.
class LayeredBodyPair {
 public:
  LayeredBodyPair(LayerStack plate, LayerStack sphere, Gap gap);

  const LayerStack& plate() const noexcept { return plate_; }
  const LayerStack& sphere() const noexcept { return sphere_; }
  const Gap& gap() const noexcept { return gap_; }
  double radius() const { return sphere_.substrate_extent().metres(); }

 private:
  LayerStack plate_;
  LayerStack sphere_;
  Gap gap_;
};

/// Effective density seen through the coating of a thick body,
///   rho_n - sum_k (rho_k - rho_{k-1}) e^{-d_k / lambda},
/// d_k being the depth of the lower face of layer k below the surface.
double layer_bracket(const LayerStack& stack, double lambda);

/// Radius-weighted bracket of a coated sphere,
///   R rho_n - sum_k (R - d_k)(rho_k - rho_{k-1}) e^{-d_k / lambda}.
double sphere_layer_bracket(const LayerStack& sphere, double lambda);

/// Energy per area between the coated plate and a thick plate carrying the
/// sphere's coating.
ForceResult yukawa_layered_plate_energy(const LayeredBodyPair& pair,
                                        const YukawaParams& p,
                                        double G = kNewtonG);

/// Force between the coated sphere and the coated plate.
ForceResult yukawa_layered_sphere_plate_force(const LayeredBodyPair& pair,
                                              const YukawaParams& p,
                                              double G = kNewtonG);

struct MappingDiagnostics {
  /// Outer sphere-layer thickness over R.
  double ratio_1;
  /// Total sphere-coating thickness over R.
  double ratio_2;
  /// |F_sphere - 2 pi R E_plates| / |F_sphere|.
  double rel_mapping_error;
};

MappingDiagnostics yukawa_mapping_error(const LayeredBodyPair& pair,
                                        const YukawaParams& p);

}  // namespace proxforce
