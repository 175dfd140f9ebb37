#include <cmath>
#include <numbers>
#include <string>

#include "proxforce/errors.hpp"
#include "proxforce/yukawa.hpp"

namespace proxforce {

namespace {

constexpr double kPi = std::numbers::pi;

// Visits layers from the outside in, passing the density step across the
// layer's lower face and that face's depth below the outer surface.
template <typename Visitor>
void for_each_interface(const LayerStack& stack, Visitor&& visit) {
  const auto& layers = stack.layers();
  double depth = 0.0;
  for (std::size_t i = layers.size(); i-- > 0;) {
    depth += layers[i].thickness();
    const double below =
        i == 0 ? stack.substrate_density() : layers[i - 1].density();
    visit(layers[i].density() - below, depth);
  }
}

void add_substrate_diagnostics(ForceResult& out, const LayerStack& plate,
                               double lambda) {
  const Thickness& d1 = plate.substrate_extent();
  if (d1.is_infinite()) {
    out.with("plate_substrate_exp", 0.0);
    out.with("lambda_over_D1", 0.0);
  } else {
    out.with("plate_substrate_exp", exp_neg(d1.metres() / lambda));
    out.with("lambda_over_D1", lambda / d1.metres());
  }
}

}  // namespace

LayeredBodyPair::LayeredBodyPair(LayerStack plate, LayerStack sphere, Gap gap)
    : plate_(std::move(plate)), sphere_(std::move(sphere)), gap_(gap) {
  if (sphere_.substrate_extent().is_infinite()) {
    throw DomainError("sphere stack needs a finite radius");
  }
  const double r = sphere_.substrate_extent().metres();
  if (sphere_.total_layer_thickness() >= r) {
    throw DomainError("sphere coating layers (" +
                      std::to_string(sphere_.total_layer_thickness()) +
                      " m) do not fit inside radius " + std::to_string(r));
  }
}

double layer_bracket(const LayerStack& stack, double lambda) {
  double s = stack.surface_density();
  for_each_interface(stack, [&](double step, double depth) {
    s -= step * exp_neg(depth / lambda);
  });
  return s;
}

double sphere_layer_bracket(const LayerStack& sphere, double lambda) {
  const double r = sphere.substrate_extent().metres();
  double s = r * sphere.surface_density();
  for_each_interface(sphere, [&](double step, double depth) {
    s -= (r - depth) * step * exp_neg(depth / lambda);
  });
  return s;
}

ForceResult yukawa_layered_plate_energy(const LayeredBodyPair& pair,
                                        const YukawaParams& p, double G) {
  const double lambda = p.lambda();
  const double value = -2.0 * kPi * G * p.alpha() * lambda * lambda * lambda *
                       exp_neg(pair.gap().separation() / lambda) *
                       layer_bracket(pair.plate(), lambda) *
                       layer_bracket(pair.sphere(), lambda);
  ForceResult out{value, Method::Exact, 0.0, {}};
  add_substrate_diagnostics(out, pair.plate(), lambda);
  return out;
}

ForceResult yukawa_layered_sphere_plate_force(const LayeredBodyPair& pair,
                                              const YukawaParams& p,
                                              double G) {
  const double lambda = p.lambda();
  const double value = -4.0 * kPi * kPi * G * p.alpha() * lambda * lambda *
                       lambda * exp_neg(pair.gap().separation() / lambda) *
                       layer_bracket(pair.plate(), lambda) *
                       sphere_layer_bracket(pair.sphere(), lambda);
  ForceResult out{value, Method::Exact, 0.0, {}};
  const auto m = yukawa_mapping_error(pair, p);
  out.with("ratio_1", m.ratio_1);
  out.with("ratio_2", m.ratio_2);
  out.with("rel_mapping_error", m.rel_mapping_error);
  out.with("lambda_over_R", lambda / pair.radius());
  add_substrate_diagnostics(out, pair.plate(), lambda);
  return out;
}

MappingDiagnostics yukawa_mapping_error(const LayeredBodyPair& pair,
                                        const YukawaParams& p) {
  const double r = pair.radius();
  const double lambda = p.lambda();
  const auto& layers = pair.sphere().layers();
  const double outer = layers.empty() ? 0.0 : layers.back().thickness();

  // F - 2 pi R E reduces to the prefactor times sum_k d_k step_k e^{-d_k/l};
  // summing that directly avoids the cancellation in T - R S.
  double difference = 0.0;
  for_each_interface(pair.sphere(), [&](double step, double depth) {
    difference += depth * step * exp_neg(depth / lambda);
  });
  const double t = sphere_layer_bracket(pair.sphere(), lambda);
  const double rel = t == 0.0 ? 0.0 : std::abs(difference) / std::abs(t);
  return MappingDiagnostics{outer / r, pair.sphere().total_layer_thickness() / r,
                            rel};
}

}  // namespace proxforce
