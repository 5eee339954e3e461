#include "hypack/volumes.hpp"

#include "hypack/errors.hpp"
#include "hypack/simplex_model.hpp"
#include "hypack/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypack {
namespace {

using std::numbers::pi;

// Small theta switches to interval integrals of log|2 sin|.
constexpr double kSmallTheta = 0.05;

double clamp_volume(double v) {
  if (v < -1e-12) throw std::logic_error("negative volume " + std::to_string(v));
  return v < 0.0 ? 0.0 : v;
}

bool valid_angle(double a) { return std::isfinite(a) && a >= 0.0 && a <= pi / 2; }

}  // namespace

OrthoschemeAngles3::OrthoschemeAngles3(double a01, double a12, double a23)
    : a01_(a01), a12_(a12), a23_(a23) {
  if (!valid_angle(a01) || !valid_angle(a12) || !valid_angle(a23)) {
    throw DomainError("orthoscheme angles must lie in [0, pi/2]");
  }
  const double c12 = std::cos(a12);
  const double s01 = std::sin(a01);
  const double s23 = std::sin(a23);
  double disc = c12 * c12 - s01 * s01 * s23 * s23;
  if (disc < -1e-14) throw DomainError("Lambert-cube case excluded: theta is not real");
  disc = std::max(disc, 0.0);
  theta_ = std::atan2(std::sqrt(disc), std::cos(a01) * std::cos(a23));
}

double orthoscheme3_volume(const OrthoschemeAngles3& angles) {
  const double t = angles.theta();
  const double a01 = angles.a01();
  const double a12 = angles.a12();
  const double a23 = angles.a23();
  double v;
  if (t < kSmallTheta) {
    // Same sum regrouped into differences L(c + t) - L(c - t), using
    // L(pi - x) = -L(x):
    //   L(pi/2 + a12 - t) + L(pi/2 - a12 - t) = -D(pi/2 - a12),
    //   2 L(pi/2 - t) = -D(pi/2).
    v = lobachevsky_difference(a01, t) - lobachevsky_difference(pi / 2 - a12, t) +
        lobachevsky_difference(a23, t) - lobachevsky_difference(pi / 2, t);
  } else {
    v = lobachevsky(a01 + t) - lobachevsky(a01 - t) + lobachevsky(pi / 2 + a12 - t) +
        lobachevsky(pi / 2 - a12 - t) + lobachevsky(a23 + t) - lobachevsky(a23 - t) +
        2.0 * lobachevsky(pi / 2 - t);
  }
  return clamp_volume(0.25 * v);
}

double hyperball_piece_volume(const HyperballPieceSpec& spec) {
  const double a = spec.base_volume;
  const double h = spec.height;
  if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("base volume must be >= 0");
  if (!(h >= 0.0) || !std::isfinite(h)) throw std::invalid_argument("height must be >= 0");
  switch (spec.n) {
    case 3: return 0.25 * a * (std::sinh(2.0 * h) + 2.0 * h);
    case 4: return 0.125 * a * (2.0 / 3.0 * std::sinh(3.0 * h) + 6.0 * std::sinh(h));
    case 5:
      return 0.0625 * a * (0.5 * std::sinh(4.0 * h) + 4.0 * std::sinh(2.0 * h) + 6.0 * h);
    default: throw std::invalid_argument("hyperball piece: unsupported dimension " + std::to_string(spec.n));
  }
}

double base_orthoscheme_volume(double p) {
  require_p_in_domain(p);
  return orthoscheme3_volume(OrthoschemeAngles3(pi / p, pi / 3, pi / 3));
}

double schlaefli_constant4() { return 12.0 / (pi * pi); }

double truncated_orthoscheme4_volume(double p) {
  require_p_in_domain(p);
  const double f4 = 2.0 / 15.0 - 2.0 / (3.0 * p);
  return f4 / schlaefli_constant4();
}

}  // namespace hypack
