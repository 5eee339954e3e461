#include "hypack/special_functions.hpp"

#include "hypack/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hypack {
namespace {

constexpr int kClausenTerms = 30;

// |B_2k| / (2k (2k+1) (2k)!)
const std::array<double, kClausenTerms>& clausen_coefficients() {
  static const std::array<double, kClausenTerms> coeffs = [] {
    std::array<double, kClausenTerms> c{};
    double factorial = 1.0;  // (2k)!
    for (int k = 1; k <= kClausenTerms; ++k) {
      factorial *= (2.0 * k - 1.0) * (2.0 * k);
      const double b2k = std::abs(boost::math::unchecked_bernoulli_b2n<double>(k));
      c[k - 1] = b2k / (2.0 * k * (2.0 * k + 1.0) * factorial);
    }
    return c;
  }();
  return coeffs;
}

// Cl2(t) for t in [0, pi].
double clausen_reduced(double t) {
  if (t == 0.0) return 0.0;
  const auto& c = clausen_coefficients();
  const double t2 = t * t;
  double power = t * t2;
  double tail = 0.0;
  for (int k = 0; k < kClausenTerms; ++k) {
    const double term = c[k] * power;
    tail += term;
    if (term < 1e-18 * std::abs(tail)) break;
    power *= t2;
  }
  return t - t * std::log(t) + tail;
}

}  // namespace

double lobachevsky(double x) {
  using std::numbers::pi;
  if (!std::isfinite(x)) throw DomainError("lobachevsky: argument must be finite");
  // Reduce to r in [-pi/2, pi/2] by periodicity, then use oddness.
  double r = x - pi * std::nearbyint(x / pi);
  const double sign = r < 0.0 ? -1.0 : 1.0;
  r = std::abs(r);
  if (r > pi / 2) r = pi / 2;  // rounding at the half-period
  return sign * 0.5 * clausen_reduced(2.0 * r);
}

double lobachevsky_difference(double center, double half_width) {
  using std::numbers::pi;
  if (!std::isfinite(center) || !std::isfinite(half_width) || half_width < 0.0) {
    throw DomainError("lobachevsky_difference: invalid interval");
  }
  const double lo = center - half_width;
  const double hi = center + half_width;
  // The integrand has log singularities at multiples of pi; Gauss-Legendre is
  // only used when the nearest one is at least two interval lengths away.
  const double below = lo - pi * std::floor(lo / pi);
  const double above = pi * std::ceil(hi / pi) - hi;
  const bool straddles = std::floor(lo / pi) != std::floor(hi / pi);
  if (straddles || std::min(below, above) < 2.0 * (hi - lo)) {
    return lobachevsky(hi) - lobachevsky(lo);
  }
  // Map from (center, half_width) directly; rounding lo and hi first would
  // perturb the width by an ulp of the center.
  using rule = boost::math::quadrature::gauss<double, 30>;
  auto f = [](double t) { return -std::log(std::abs(2.0 * std::sin(t))); };
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  double sum = x[0] == 0.0 ? w[0] * f(center) : w[0] * (f(center - half_width * x[0]) + f(center + half_width * x[0]));
  for (std::size_t i = 1; i < x.size(); ++i) {
    sum += w[i] * (f(center - half_width * x[i]) + f(center + half_width * x[i]));
  }
  return half_width * sum;
}

double arccosh_safe(double c) {
  if (std::isnan(c) || c < 1.0 - 1e-12) {
    throw DomainError("arccosh: argument " + std::to_string(c) + " is below 1");
  }
  if (c <= 1.0) return 0.0;
  if (c > 1e150) return std::log(c) + std::numbers::ln2;
  return std::log(c + std::sqrt(c - 1.0) * std::sqrt(c + 1.0));
}

}  // namespace hypack
