#include "hypack/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypack::oracle {

double lobachevsky_quadrature(double x) {
  if (!(x >= 0.0 && x <= std::numbers::pi)) throw std::invalid_argument("lobachevsky_quadrature: x outside [0, pi]");
  if (x == 0.0) return 0.0;
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [](double t) { return -std::log(2.0 * std::sin(t)); };
  return integrator.integrate(f, 0.0, x, 1e-15);
}

double hyperball_piece_quadrature(int n, double base_volume, double height) {
  if (n < 2) throw std::invalid_argument("hyperball_piece_quadrature: n must be at least 2");
  if (height == 0.0) return 0.0;
  auto f = [n](double t) { return std::pow(std::cosh(t), n - 1); };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, height, 10, 1e-13);
  return base_volume * integral;
}

}  // namespace hypack::oracle
