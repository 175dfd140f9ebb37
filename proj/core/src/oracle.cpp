#include "proxforce/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "proxforce/errors.hpp"
#include "proxforce/gravity.hpp"
#include "proxforce/rng.hpp"
#include "proxforce/yukawa.hpp"

namespace proxforce {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kBlockSize = 4096;
constexpr std::uint64_t kStrata = 16;

// Running mean / sum of squared deviations (Welford), combinable with
// Chan's formula. Combination order is fixed, so results are reproducible.
struct Moments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  double correction_sum = 0.0;

  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.n) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(n) *
                     static_cast<double>(o.n) / total;
    n += o.n;
    correction_sum += o.correction_sum;
  }
};

void require_layout(const SolidBody& body1, const SolidBody& body2) {
  if (body1.shape() != BodyShape::Slab) {
    throw DomainError("oracle: body1 must be the lower slab");
  }
  if (!(body2.bottom() > body1.top())) {
    throw DomainError("oracle: bodies overlap (body2 bottom " +
                      std::to_string(body2.bottom()) + " m is not above slab top " +
                      std::to_string(body1.top()) + " m)");
  }
}

Vec3 sample_body2(const SolidBody& body, double lateral, CounterRng& rng) {
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  const double u3 = rng.uniform();
  if (body.shape() == BodyShape::Ball) {
    const double r = body.radius() * std::cbrt(u1);
    const double cos_t = 1.0 - 2.0 * u2;
    const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
    const double phi = 2.0 * kPi * u3;
    return Vec3{r * sin_t * std::cos(phi), r * sin_t * std::sin(phi),
                body.centre_z() + r * cos_t};
  }
  const double s = lateral * std::sqrt(u1);
  const double phi = 2.0 * kPi * u2;
  return Vec3{s * std::cos(phi), s * std::sin(phi),
              body.bottom() + body.thickness().metres() * u3};
}

}  // namespace

// ---------------------------------------------------------------------------
// PairKernel

PairKernel PairKernel::gravity(double G) {
  if (!(G > 0.0)) throw DomainError("G must be positive");
  return PairKernel(KernelKind::Gravity, G, 0.0, 0.0);
}

PairKernel PairKernel::yukawa(const YukawaParams& p, double G) {
  if (!(G > 0.0)) throw DomainError("G must be positive");
  return PairKernel(KernelKind::Yukawa, G, p.alpha(), p.lambda());
}

double PairKernel::potential(double d) const {
  if (!(d > 0.0)) throw DomainError("pair distance must be positive");
  if (kind_ == KernelKind::Gravity) return -G_ / d;
  return -G_ * alpha_ * exp_neg(d / lambda_) / d;
}

double PairKernel::force_z(const Vec3& p1, const Vec3& p2) const {
  const double dx = p2.x - p1.x;
  const double dy = p2.y - p1.y;
  const double dz = p2.z - p1.z;
  const double d2 = dx * dx + dy * dy + dz * dz;
  const double d = std::sqrt(d2);
  if (kind_ == KernelKind::Gravity) return -G_ * dz / (d2 * d);
  if (alpha_ == 0.0) return 0.0;
  return -G_ * alpha_ * exp_neg(d / lambda_) * (1.0 / d2 + 1.0 / (lambda_ * d)) *
         dz / d;
}

double PairKernel::slab_tail_force(double h, double depth,
                                   double cutoff) const {
  const double near = std::hypot(cutoff, h);
  if (kind_ == KernelKind::Gravity) {
    if (!std::isfinite(depth)) throw DomainError("gravity tail of infinite slab");
    const double far = std::hypot(cutoff, h + depth);
    // far - near without cancellation.
    return -2.0 * kPi * G_ * depth * (2.0 * h + depth) / (far + near);
  }
  const double far_term =
      std::isfinite(depth) ? exp_neg(std::hypot(cutoff, h + depth) / lambda_)
                           : 0.0;
  return -2.0 * kPi * G_ * alpha_ * lambda_ *
         (exp_neg(near / lambda_) - far_term);
}

double PairKernel::point_slab_force(double h, const Thickness& thickness) const {
  const PointMass unit(1.0, h);
  const Plate slab(1.0, thickness);
  if (kind_ == KernelKind::Gravity) return grav_point_plate_force(unit, slab, G_);
  return yukawa_point_plate_force(unit, slab, YukawaParams(alpha_, lambda_), G_);
}

// ---------------------------------------------------------------------------
// SolidBody

SolidBody SolidBody::slab(double density, Thickness thickness, double top,
                          std::optional<double> lateral_cutoff) {
  if (!(density > 0.0)) throw DomainError("slab density must be positive");
  if (!std::isfinite(top)) throw DomainError("slab top must be finite");
  if (lateral_cutoff && !(*lateral_cutoff > 0.0 && std::isfinite(*lateral_cutoff))) {
    throw DomainError("slab lateral cutoff must be positive");
  }
  SolidBody b;
  b.shape_ = BodyShape::Slab;
  b.density_ = density;
  b.thickness_ = thickness;
  b.top_ = top;
  b.cutoff_ = lateral_cutoff;
  return b;
}

SolidBody SolidBody::ball(double density, double radius, double centre_z) {
  if (!(density > 0.0)) throw DomainError("ball density must be positive");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("ball radius must be positive");
  }
  SolidBody b;
  b.shape_ = BodyShape::Ball;
  b.density_ = density;
  b.thickness_ = Thickness::finite(2.0 * radius);
  b.radius_ = radius;
  b.centre_ = centre_z;
  b.top_ = centre_z + radius;
  return b;
}

double SolidBody::bottom() const {
  if (shape_ == BodyShape::Ball) return centre_ - radius_;
  return top_ - thickness_.metres();
}

// ---------------------------------------------------------------------------
// Quadrature oracle

ForceResult oracle_quad_force(const SolidBody& body1, const SolidBody& body2,
                              const PairKernel& kernel,
                              const QuadratureConfig& quad) {
  require_layout(body1, body2);
  const double top1 = body1.top();
  const double rho = body1.density() * body2.density();
  auto point_force = [&](double z) {
    return kernel.point_slab_force(z - top1, body1.thickness());
  };

  ForceResult out{0.0, Method::OracleQuad, 0.0, {}};
  if (body2.shape() == BodyShape::Ball) {
    const double r = body2.radius();
    const double c = body2.centre_z();
    auto slice = [&](double u) {
      return kPi * (r - u) * (r + u) * point_force(c + u);
    };
    const Integral i = integrate(slice, -r, r, quad);
    out.value = rho * i.value;
    out.error_estimate = std::abs(rho) * i.error;
  } else {
    if (body2.thickness().is_infinite()) {
      throw DomainError("oracle: upper slab must have finite thickness");
    }
    const double area = body2.lateral_cutoff()
                            ? kPi * *body2.lateral_cutoff() * *body2.lateral_cutoff()
                            : 1.0;
    const Integral i =
        integrate(point_force, body2.bottom(), body2.top(), quad);
    out.value = rho * area * i.value;
    out.error_estimate = std::abs(rho) * area * i.error;
    out.with("area", area);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monte Carlo oracle

ForceResult oracle_mc_force(const SolidBody& body1, const SolidBody& body2,
                            const PairKernel& kernel, const McConfig& mc) {
  require_layout(body1, body2);
  if (mc.samples < 1000) throw DomainError("Monte Carlo needs at least 1000 samples");

  const bool gravity = kernel.kind() == KernelKind::Gravity;
  const double gap = body2.bottom() - body1.top();
  const double size2 = body2.shape() == BodyShape::Ball
                           ? body2.radius()
                           : body2.thickness().metres();

  double cutoff = 0.0;
  if (body1.lateral_cutoff()) {
    cutoff = *body1.lateral_cutoff();
  } else if (gravity) {
    throw DomainError(
        "gravity Monte Carlo needs an explicit slab lateral cutoff L");
  } else {
    cutoff = std::max({50.0 * kernel.lambda(), 10.0 * size2, 10.0 * gap});
  }

  double depth = 0.0;
  if (!body1.thickness().is_infinite()) {
    depth = body1.thickness().metres();
  } else if (gravity) {
    throw DomainError("gravity of an infinitely thick slab diverges");
  } else {
    depth = cutoff;
  }
  const bool has_floor = body1.thickness().is_infinite();

  double lateral2 = 0.0;
  double volume2 = 0.0;
  if (body2.shape() == BodyShape::Ball) {
    volume2 = 4.0 / 3.0 * kPi * std::pow(body2.radius(), 3);
  } else {
    if (!body2.lateral_cutoff()) {
      throw DomainError("Monte Carlo upper slab needs a lateral cutoff (its area)");
    }
    lateral2 = *body2.lateral_cutoff();
    volume2 = kPi * lateral2 * lateral2 * body2.thickness().metres();
  }
  const double volume1 = kPi * cutoff * cutoff * depth;
  const double rho1 = body1.density();
  const double weight2 = body2.density() * volume2;
  const double top1 = body1.top();

  const std::uint64_t strata = mc.stratified ? kStrata : 1;
  const std::uint64_t per_stratum = (mc.samples + strata - 1) / strata;
  const std::uint64_t blocks_per_stratum =
      (per_stratum + kBlockSize - 1) / kBlockSize;
  const std::uint64_t total_blocks = strata * blocks_per_stratum;

  std::vector<Moments> block_moments(total_blocks);
  auto run_block = [&](std::uint64_t block) {
    const std::uint64_t stratum = block / blocks_per_stratum;
    const std::uint64_t index = block % blocks_per_stratum;
    const std::uint64_t begin = index * kBlockSize;
    const std::uint64_t end = std::min(per_stratum, begin + kBlockSize);
    CounterRng rng(mc.seed, (stratum << 32) | index);
    Moments m;
    for (std::uint64_t s = begin; s < end; ++s) {
      const Vec3 p2 = sample_body2(body2, lateral2, rng);
      const double u_lat =
          (static_cast<double>(stratum) + rng.uniform()) / static_cast<double>(strata);
      const double offset = cutoff * std::sqrt(u_lat);
      const double psi = 2.0 * kPi * rng.uniform();
      const Vec3 p1{p2.x + offset * std::cos(psi), p2.y + offset * std::sin(psi),
                    top1 - depth * rng.uniform()};
      const double h = p2.z - top1;
      double correction = kernel.slab_tail_force(h, depth, cutoff);
      if (has_floor) {
        correction += kernel.point_slab_force(h + depth, Thickness::infinite());
      }
      correction *= rho1 * weight2;
      const double sampled = rho1 * volume1 * weight2 * kernel.force_z(p1, p2);
      m.add(sampled + correction);
      m.correction_sum += correction;
    }
    block_moments[block] = m;
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(mc.jobs, static_cast<unsigned>(total_blocks)));
  if (workers == 1) {
    for (std::uint64_t b = 0; b < total_blocks; ++b) run_block(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < total_blocks; b = next++) run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  double estimate = 0.0;
  double variance = 0.0;
  double correction = 0.0;
  std::uint64_t drawn = 0;
  for (std::uint64_t k = 0; k < strata; ++k) {
    Moments stratum;
    for (std::uint64_t i = 0; i < blocks_per_stratum; ++i) {
      stratum.merge(block_moments[k * blocks_per_stratum + i]);
    }
    const double n = static_cast<double>(stratum.n);
    estimate += stratum.mean;
    variance += stratum.n > 1 ? stratum.m2 / (n - 1.0) / n : 0.0;
    correction += stratum.correction_sum / n;
    drawn += stratum.n;
  }
  const double inv_k = 1.0 / static_cast<double>(strata);
  estimate *= inv_k;
  correction *= inv_k;
  const double stderr_mean = std::sqrt(variance) * inv_k;

  ForceResult out{estimate, Method::OracleMc, stderr_mean, {}};
  out.with("samples", static_cast<double>(drawn));
  out.with("relative_stderr", estimate != 0.0 ? stderr_mean / std::abs(estimate) : 0.0);
  out.with("lateral_cutoff", cutoff);
  out.with("sampled_depth", depth);
  out.with("truncation_correction", correction);
  out.with("L_over_R", cutoff / size2);
  if (!gravity) {
    out.with("L_over_lambda", cutoff / kernel.lambda());
    out.with("tail_bound", exp_neg(std::hypot(cutoff, gap) / kernel.lambda()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nested quadrature over a slab

namespace {

// Integral over one horizontal sheet of the slab at vertical distance H
// below the point: 2 pi \int_0^inf r g(r) dr, g evaluated at lateral offset r.
template <typename Radial>
double sheet_integral(const PairKernel& kernel, double H, Radial&& g,
                      const QuadratureConfig& quad) {
  const double scale = kernel.kind() == KernelKind::Gravity
                           ? H
                           : std::min(H, kernel.lambda()) + kernel.lambda();
  auto f = [&](double r) { return 2.0 * kPi * r * g(r); };
  return integrate_to_infinity(f, 0.0, scale, quad).value;
}

template <typename Sheet>
double over_thickness(const PairKernel& kernel, const Thickness& thickness,
                      Sheet&& sheet, const QuadratureConfig& quad) {
  if (thickness.is_infinite()) {
    if (kernel.kind() == KernelKind::Gravity) {
      throw DomainError("gravity of an infinitely thick slab diverges");
    }
    return integrate_to_infinity(sheet, 0.0, kernel.lambda(), quad).value;
  }
  return integrate(sheet, 0.0, thickness.metres(), quad).value;
}

}  // namespace

double oracle_point_slab_energy(const PairKernel& kernel, double h,
                                const Thickness& thickness,
                                const QuadratureConfig& quad) {
  if (!(h > 0.0)) throw DomainError("height must be positive");
  if (kernel.kind() == KernelKind::Gravity) {
    throw DomainError("point energy over a laterally infinite slab diverges for gravity");
  }
  auto sheet = [&](double t) {
    const double H = h + t;
    return sheet_integral(
        kernel, H, [&](double r) { return kernel.potential(std::hypot(r, H)); },
        quad);
  };
  return over_thickness(kernel, thickness, sheet, quad);
}

double oracle_point_slab_force(const PairKernel& kernel, double h,
                               const Thickness& thickness,
                               const QuadratureConfig& quad) {
  if (!(h > 0.0)) throw DomainError("height must be positive");
  auto sheet = [&](double t) {
    const double H = h + t;
    // z-component for a source a vertical distance H below the point.
    return sheet_integral(
        kernel, H,
        [&](double r) { return kernel.force_z(Vec3{}, Vec3{r, 0.0, H}); },
        quad);
  };
  return over_thickness(kernel, thickness, sheet, quad);
}

double oracle_slab_slab_energy(const PairKernel& kernel, double a,
                               const Thickness& lower, const Thickness& upper,
                               const QuadratureConfig& quad) {
  if (!(a > 0.0)) throw DomainError("separation must be positive");
  auto layer = [&](double t) {
    return oracle_point_slab_energy(kernel, a + t, lower, quad);
  };
  return over_thickness(kernel, upper, layer, quad);
}

}  // namespace proxforce
