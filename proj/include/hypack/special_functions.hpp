#pragma once

namespace hypack {

/// Lobachevsky function  L(x) = -int_0^x log|2 sin t| dt.
///
/// L is odd and pi-periodic. The argument is reduced to [0, pi/2] and
/// evaluated through the Clausen series
///
///   L(x) = 1/2 Cl2(2x),
///   Cl2(t) = t - t log t + sum_k |B_2k| t^(2k+1) / (2k (2k+1) (2k)!),
///
/// which converges like 4^-k on the reduced range. Accurate to ~1e-15
/// absolute. Throws DomainError for non-finite x.
double lobachevsky(double x);

/// L(center + half_width) - L(center - half_width), evaluated directly as an
/// integral over the short interval so that small differences keep their
/// relative accuracy. Intervals close to a multiple of pi fall back to the
/// plain difference.
double lobachevsky_difference(double center, double half_width);

/// arccosh with a tolerance band: values in [1 - 1e-12, 1] map to 0, smaller
/// values throw DomainError.
double arccosh_safe(double c);

}  // namespace hypack
