#include "hypack/density.hpp"

#include "hypack/errors.hpp"
#include "hypack/simplex_model.hpp"
#include "hypack/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hypack {
namespace {

using std::numbers::pi;

double guarded_lo(double guard) { return p_lower() + guard; }
double guarded_hi(double guard) { return kPUpper - guard; }

}  // namespace

double height(double p) {
  require_p_in_domain(p);
  if (p < guarded_lo(kEvalGuard) - 1e-14) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "height diverges at the lower endpoint; p = " << p << " is within " << kEvalGuard << " of it";
    throw DomainError(msg.str());
  }
  // arccosh(1 + y) with y = (1 - 2c) / (3c - 1), c = cos(2pi/p); the
  // numerator is written as a product so it stays accurate as p -> 6.
  const double c = std::cos(2.0 * pi / p);
  const double y = 4.0 * std::sin(pi / p + pi / 6) * std::sin(pi * (6.0 - p) / (6.0 * p)) / (3.0 * c - 1.0);
  return 0.5 * std::log1p(y + std::sqrt(y * (2.0 + y)));
}

DensityReport density(double p) {
  require_p_in_domain(p, kEvalGuard);
  DensityReport r;
  r.p = p;
  r.s = p_to_s(p);
  r.h = height(p);
  r.theta = OrthoschemeAngles3(pi / p, pi / 3, pi / 3).theta();
  r.vol3_base = base_orthoscheme_volume(p);
  r.vol4_orthoscheme = truncated_orthoscheme4_volume(p);
  r.vol4_hyperball_piece = hyperball_piece_volume({4, r.vol3_base, r.h});
  r.delta = r.vol4_hyperball_piece / r.vol4_orthoscheme;
  return r;
}

OptimumResult maximize(double tol) { return maximize(tol, guarded_lo(kOptGuard), guarded_hi(kOptGuard)); }

OptimumResult maximize(double tol, double lo, double hi) {
  if (!(tol >= 1e-14 && tol <= 1e-3)) throw std::invalid_argument("maximize: tol must lie in [1e-14, 1e-3]");
  double a = std::max(lo, guarded_lo(kOptGuard));
  double b = std::min(hi, guarded_hi(kOptGuard));
  if (!(a < b)) throw DomainError("maximize: bracket does not meet the admissible domain");

  auto f = [](double p) { return density(p).delta; };
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int iterations = 0;
  while (b - a > tol) {
    ++iterations;
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }

  OptimumResult out;
  out.p_opt = f1 >= f2 ? x1 : x2;
  out.delta_opt = std::max(f1, f2);
  out.iterations = iterations;
  out.bracket_width = b - a;

  // Parabola through x1, x2 and the midpoint of the final bracket.
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  const double d1 = (f1 - fm) / (x1 - xm);
  const double d2 = (f2 - fm) / (x2 - xm);
  const double curv = (d2 - d1) / (x2 - x1);
  if (curv < 0.0) {
    const double vertex = 0.5 * (x1 + xm) - d1 / (2.0 * curv);
    if (vertex > a && vertex < b) {
      const double fv = f(vertex);
      if (fv > out.delta_opt) {
        out.p_opt = vertex;
        out.delta_opt = fv;
      }
    }
  }
  if (fm > out.delta_opt) {
    out.p_opt = xm;
    out.delta_opt = fm;
  }
  return out;
}

std::vector<DensityReport> sweep(double p_from, double p_to, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
  if (!(std::isfinite(p_from) && std::isfinite(p_to)) || p_from > p_to) {
    throw std::invalid_argument("sweep: need finite p_from <= p_to");
  }
  const double a = std::max(p_from, guarded_lo(kEvalGuard));
  const double b = std::min(p_to, guarded_hi(kEvalGuard));
  if (!(a < b)) throw DomainError("sweep: range does not meet the admissible domain");
  std::vector<DensityReport> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double p = i == steps - 1 ? b : a + (b - a) * i / (steps - 1);
    rows.push_back(density(p));
  }
  return rows;
}

MonotonicityWitness monotonicity_witness() {
  const OptimumResult opt = maximize(1e-10);
  const double p2 = p_lower() + 1e-6;
  return {height(opt.p_opt), height(p2), opt.delta_opt, density(p2).delta};
}

}  // namespace hypack
