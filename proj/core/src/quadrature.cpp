#include "proxforce/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "proxforce/errors.hpp"

namespace proxforce {

namespace {

// 21-point Kronrod rule in QUADPACK order: descending nodes, the 10-point
// Gauss nodes at odd indices, the centre last.
struct Rule {
  std::array<double, 11> xgk;
  std::array<double, 11> wgk;
  std::array<double, 5> wg;
};

const Rule& rule() {
  static const Rule r = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto& x = gauss_kronrod<double, 21>::abscissa();
    const auto& w = gauss_kronrod<double, 21>::weights();
    const auto& wg = gauss<double, 10>::weights();
    Rule out{};
    for (std::size_t j = 0; j < 11; ++j) {
      out.xgk[j] = x[10 - j];
      out.wgk[j] = w[10 - j];
    }
    for (std::size_t m = 0; m < 5; ++m) out.wg[m] = wg[4 - m];
    return out;
  }();
  return r;
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  int depth;
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const {
    return x.error < y.error;
  }
};

double checked_eval(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand is not finite at x = " << x;
    throw NonFiniteIntegrand(msg.str(), x);
  }
  return y;
}

Segment gauss_kronrod21(const Integrand& f, double lo, double hi, int depth,
                        long& evaluations) {
  const auto& [kXgk, kWgk, kWg] = rule();
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  const double fc = checked_eval(f, centre);
  double resk = kWgk[10] * fc;
  double resg = 0.0;
  double resabs = std::abs(resk);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked_eval(f, centre - dx);
    f2[j] = checked_eval(f, centre + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  evaluations += 21;

  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
  }

  const double ah = std::abs(half);
  const double result = resk * half;
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return Segment{lo, hi, result, err, depth};
}

// Neumaier-compensated sum of segment values and errors.
std::pair<double, double> totals(const std::vector<Segment>& segs) {
  double sum = 0.0;
  double comp = 0.0;
  double err = 0.0;
  for (const auto& s : segs) {
    const double t = sum + s.value;
    if (std::abs(sum) >= std::abs(s.value)) {
      comp += (sum - t) + s.value;
    } else {
      comp += (s.value - t) + sum;
    }
    sum = t;
    err += s.error;
  }
  return {sum + comp, err};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (max_depth < 1 || max_intervals < 2) {
    throw DomainError("quadrature depth and interval limits must be positive");
  }
}

Integral integrate(const Integrand& f, double lo, double hi,
                   const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("integration limits must be finite");
  }
  if (lo == hi) return Integral{};

  long evaluations = 0;
  std::priority_queue<Segment, std::vector<Segment>, ByError> active;
  std::vector<Segment> settled;  // cannot be bisected further

  const Segment first = gauss_kronrod21(f, lo, hi, 0, evaluations);
  double value = first.value;
  double error = first.error;
  active.push(first);

  auto within_tolerance = [&] {
    return error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
  };

  while (!within_tolerance()) {
    if (active.empty() ||
        static_cast<int>(active.size() + settled.size()) >= cfg.max_intervals) {
      break;
    }
    const Segment worst = active.top();
    active.pop();

    const double mid = 0.5 * (worst.lo + worst.hi);
    const bool too_narrow =
        std::abs(worst.hi - worst.lo) <=
        100.0 * kEps * std::max(std::abs(worst.lo), std::abs(worst.hi));
    if (worst.depth >= cfg.max_depth || too_narrow || mid == worst.lo ||
        mid == worst.hi) {
      settled.push_back(worst);
      continue;
    }

    const Segment left =
        gauss_kronrod21(f, worst.lo, mid, worst.depth + 1, evaluations);
    const Segment right =
        gauss_kronrod21(f, mid, worst.hi, worst.depth + 1, evaluations);
    value += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    active.push(left);
    active.push(right);
  }

  std::vector<Segment> all = std::move(settled);
  all.reserve(all.size() + active.size());
  while (!active.empty()) {
    all.push_back(active.top());
    active.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  const auto [sum, err] = totals(all);

  Integral out{sum, err, evaluations};
  if (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum))) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "adaptive quadrature did not converge: estimate " << sum
        << ", achieved error " << err << " (requested rel " << cfg.rel_tol
        << ", " << all.size() << " intervals)";
    throw QuadratureError(msg.str(), sum, err);
  }
  return out;
}

Integral integrate_radial(const Integrand& f, double r_max,
                          const QuadratureConfig& cfg) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw DomainError("radial integration limit must be positive");
  }
  auto in_theta = [&](double theta) {
    const double r = std::min(r_max, r_max * std::sin(theta));
    const double y = f(r);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrand is not finite at r = " << r;
      throw NonFiniteIntegrand(msg.str(), r);
    }
    return y * r_max * std::cos(theta);
  };
  return integrate(in_theta, 0.0, 0.5 * std::numbers::pi, cfg);
}

Integral integrate_to_infinity(const Integrand& f, double lo, double scale,
                               const QuadratureConfig& cfg) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("semi-infinite integration scale must be positive");
  }
  auto mapped = [&](double t) {
    const double one_minus = 1.0 - t;
    if (one_minus <= 0.0) return 0.0;
    const double x = lo + scale * t / one_minus;
    const double y = f(x);
    if (y == 0.0) return 0.0;
    return y * scale / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0, 1.0, cfg);
}

}  // namespace proxforce
