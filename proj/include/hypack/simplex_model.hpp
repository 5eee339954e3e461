#pragma once

// Regular 4-simplex with outer vertices in the Klein (projective) model,
// centred at (1,0,0,0,0), together with the characteristic orthoscheme
// P0 P1 P2 P3 B1 that tiles its truncation 120 times.
//
// The family has one parameter. s is the Euclidean radius of the vertices in
// the model (s = 1: ideal simplex) and p is the Coxeter parameter, i.e. pi/p
// is the dihedral angle of the orthoscheme along the simplex facet. They are
// tied by cos(pi/p) = sqrt(10 / (16 - s^2)). Vertices are outer and the
// truncating polar hyperplanes are pairwise ultraparallel exactly for
//
//   pi / arccos(sqrt(2/3)) < p < 6      <=>      1 < s < sqrt(8/3).

#include "hypack/lorentz.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace hypack {

/// Minimum distance from an endpoint for density/height evaluation.
inline constexpr double kEvalGuard = 1e-9;
/// Endpoint guard for the optimizer bracket.
inline constexpr double kOptGuard = 1e-8;
inline constexpr double kPUpper = 6.0;

/// pi / arccos(sqrt(2/3)) = 5.10429931...
double p_lower();
/// pi / arccos(sqrt(3/4)), evaluated in floating point (6 up to rounding).
double p_upper_computed();
/// sqrt(8/3)
double s_upper();

/// Throws DomainError unless p_lower() + guard <= p <= 6 - guard; with
/// guard = 0 the interval is open.
void require_p_in_domain(double p, double guard = 0.0);
void require_s_in_domain(double s);

/// s = sqrt(16 cos^2(pi/p) - 10) / cos(pi/p).
double p_to_s(double p);
/// p = pi / arccos(sqrt(10 / (16 - s^2))).
double s_to_p(double s);

class SimplexParameter {
 public:
  static SimplexParameter from_p(double p);
  static SimplexParameter from_s(double s);

  double p() const { return p_; }
  double s() const { return s_; }

 private:
  SimplexParameter(double p, double s) : p_(p), s_(s) {}
  double p_;
  double s_;
};

/// Symmetric matrix of pairwise products of unit forms (unit diagonal).
class GramMatrix {
 public:
  explicit GramMatrix(Eigen::MatrixXd entries);

  const Eigen::MatrixXd& entries() const { return g_; }
  Eigen::Index size() const { return g_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return g_(i, j); }

 private:
  Eigen::MatrixXd g_;
};

GramMatrix gram_of_forms(std::span<const HyperplaneForm> forms);

struct RegularSimplex4 {
  double s = 0.0;
  double p = 0.0;
  /// b1..b5, each with x0 = 1.
  std::vector<LorentzVector> vertices;
  /// P0 (simplex centre), P1 (centre of B1B2B3B4), P2 (of B1B2B3), P3 (of B1B2).
  std::vector<LorentzVector> centers;
  /// Q_j = line(B1, P_j) meets pol(B1); vertices of the hyperball base cell.
  std::vector<LorentzVector> feet;
  /// Orthoscheme P0P1P2P3B1: faces opposite P0, P1, P2, P3, B1, inward.
  std::vector<HyperplaneForm> face_forms;
  /// pol(b_i); the hyperball base planes.
  std::vector<HyperplaneForm> polar_forms;
  /// Simplex facet opposite b_i, inward.
  std::vector<HyperplaneForm> facet_forms;
  /// Q0..Q3 in a 3-dimensional model of pol(B1).
  std::vector<LorentzVector> base_cell;
  /// Faces of the base cell opposite Q0..Q3, inward, in that model.
  std::vector<HyperplaneForm> base_forms;
};

RegularSimplex4 build_simplex(double s);

/// |(s^2+4)/(s^2-16) + cos(2 pi/p)|: the simplex dihedral angle must be twice
/// the orthoscheme angle pi/p.
double dihedral_consistency(double p);

}  // namespace hypack
