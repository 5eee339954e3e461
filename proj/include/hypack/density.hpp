#pragma once

// Density of the congruent hyperball packing attached to the regular
// truncated 4-simplex with parameter p, measured in one characteristic
// orthoscheme R1 (the simplex is 120 congruent copies, so the ratio is the
// same for the whole cell).

#include <vector>

namespace hypack {

/// Half the distance between two truncating hyperplanes:
///   h(p) = 1/2 arccosh( cos(2pi/p) / (3 cos(2pi/p) - 1) ).
/// Diverges at the lower endpoint; inside kEvalGuard of it the call throws
/// DomainError.
double height(double p);

struct DensityReport {
  double p = 0.0;
  double s = 0.0;
  double h = 0.0;
  double theta = 0.0;
  double vol3_base = 0.0;
  double vol4_orthoscheme = 0.0;
  double vol4_hyperball_piece = 0.0;
  double delta = 0.0;
};

/// Requires p at least kEvalGuard inside both endpoints.
DensityReport density(double p);

struct OptimumResult {
  double p_opt = 0.0;
  double delta_opt = 0.0;
  int iterations = 0;
  double bracket_width = 0.0;
};

/// Golden-section search for the maximum of delta over
/// [p_lower + kOptGuard, 6 - kOptGuard], finished by one parabolic step.
/// tol in [1e-14, 1e-3] bounds the final bracket width.
OptimumResult maximize(double tol);
/// Same search on a caller-supplied bracket (clipped to the guarded domain).
OptimumResult maximize(double tol, double lo, double hi);

/// steps >= 2 equally spaced reports from p_from to p_to, both clipped to the
/// guarded domain, in ascending p.
std::vector<DensityReport> sweep(double p_from, double p_to, int steps);

struct MonotonicityWitness {
  double h1, h2, d1, d2;
};

/// Two packings where the larger height gives the smaller density: h1 and d1
/// at the optimum, h2 and d2 close to the ideal limit.
MonotonicityWitness monotonicity_witness();

}  // namespace hypack
