#pragma once

#include <cstdint>

namespace hypack {

/// Essential angles of a 3-dimensional hyperbolic orthoscheme (degree <= 1),
/// each in [0, pi/2]. Construction rejects the Lambert-cube configurations
/// where cos^2 a12 < sin^2 a01 sin^2 a23.
class OrthoschemeAngles3 {
 public:
  OrthoschemeAngles3(double a01, double a12, double a23);

  double a01() const { return a01_; }
  double a12() const { return a12_; }
  double a23() const { return a23_; }

  /// theta in [0, pi/2] with
  /// tan(theta) = sqrt(cos^2 a12 - sin^2 a01 sin^2 a23) / (cos a01 cos a23).
  double theta() const { return theta_; }

 private:
  double a01_, a12_, a23_, theta_;
};

/// Kellerhals' volume formula for a 3-orthoscheme in terms of the Lobachevsky
/// function. Small theta is evaluated from interval integrals so the result
/// keeps relative accuracy as the volume tends to zero.
double orthoscheme3_volume(const OrthoschemeAngles3& angles);

struct HyperballPieceSpec {
  int n = 4;                 // ambient dimension, 3..5
  double base_volume = 0.0;  // (n-1)-volume of the base polytope on the base plane
  double height = 0.0;
};

/// Volume of the one-sided hyperball piece of height h over a base polytope
/// of (n-1)-volume A, cut out by hyperplanes orthogonal to the base (k = 1):
///   n = 3:  A/4  (sinh 2h + 2h)
///   n = 4:  A/8  (2/3 sinh 3h + 6 sinh h)
///   n = 5:  A/16 (1/2 sinh 4h + 4 sinh 2h + 6h)
/// Each equals A * int_0^h cosh^(n-1)(t) dt.
double hyperball_piece_volume(const HyperballPieceSpec& spec);

/// Volume of the hyperball base cell Q0Q1Q2Q3, the orthoscheme with essential
/// angles (pi/p, pi/3, pi/3).
double base_orthoscheme_volume(double p);

/// Volume of the truncated characteristic orthoscheme R1 of the regular
/// truncated 4-simplex:  (pi^2/12) (2/15 - 2/(3p)).
double truncated_orthoscheme4_volume(double p);

/// Normalizing constant 2^4 Gamma(5/2) / pi^(5/2) = 12/pi^2 of the
/// Schlaefli function in dimension 4.
double schlaefli_constant4();

}  // namespace hypack
