#pragma once

// Independent numerical references used to check the closed forms. They
// share no code path with the evaluated formulas.

namespace hypack::oracle {

/// -int_0^x log|2 sin t| dt by tanh-sinh quadrature, for x in [0, pi].
double lobachevsky_quadrature(double x);

/// A * int_0^h cosh^(n-1)(t) dt by adaptive Gauss-Kronrod quadrature.
double hyperball_piece_quadrature(int n, double base_volume, double height);

}  // namespace hypack::oracle
