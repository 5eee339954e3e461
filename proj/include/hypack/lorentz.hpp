#pragma once

// Linear algebra of the projective model of hyperbolic n-space inside the
// Lorentz space of signature (1, n). Points and hyperplane forms are both
// carried as (n+1)-vectors; index 0 is the timelike coordinate and every
// pairing goes through the bilinear form
//
//   <x, y> = -x0*y0 + x1*y1 + ... + xn*yn.
//
// A form u is incident with a point x iff <u, x> = 0, so the pole of a
// hyperplane and its form share a coefficient vector.

#include <Eigen/Dense>

#include <initializer_list>
#include <span>
#include <vector>

namespace hypack {

using Coords = Eigen::VectorXd;

/// Relative band around 0 for classifying <x,x>.
inline constexpr double kClassifyTol = 1e-12;
/// Band around 1 for |<u,v>| when comparing two unit forms.
inline constexpr double kPlaneTol = 1e-10;
/// Hyperplane/hyperball tangency band; touching is not intersecting.
inline constexpr double kTangencyTol = 1e-10;

/// Raw bilinear form on coefficient vectors of equal length.
double lorentz_product(const Coords& x, const Coords& y);

class LorentzVector {
 public:
  explicit LorentzVector(Coords coords);
  LorentzVector(std::initializer_list<double> coords);

  int dim() const { return static_cast<int>(x_.size()) - 1; }
  const Coords& coords() const { return x_; }
  double operator[](int i) const { return x_[i]; }

  /// Representative with unit Euclidean norm and first significant
  /// coordinate positive. Two vectors are the same projective point iff
  /// their canonical representatives agree.
  LorentzVector canonical() const;

  /// Representative with x0 = 1. Throws GeometryError when x0 vanishes.
  LorentzVector affine() const;

 private:
  Coords x_;
};

class HyperplaneForm {
 public:
  /// Rescales u so that <u,u> = 1. Throws GeometryError unless u is spacelike.
  static HyperplaneForm normalized(Coords coeffs);
  /// Stores u unchanged.
  static HyperplaneForm raw(Coords coeffs);

  int dim() const { return static_cast<int>(u_.size()) - 1; }
  const Coords& coeffs() const { return u_; }
  bool is_normalized() const { return normalized_; }

  /// Lowered-index coefficients J*u, i.e. the row that pairs with a point by
  /// the ordinary dot product.
  Coords covector() const;

  HyperplaneForm operator-() const;

 private:
  HyperplaneForm(Coords u, bool normalized) : u_(std::move(u)), normalized_(normalized) {}
  Coords u_;
  bool normalized_;
};

enum class PointClass { Proper, Boundary, Outer };

const char* to_string(PointClass c);

/// Which half of the hyperball body is present; "+" is where <x, base> > 0.
enum class Side { Plus, Minus, Both };

struct Hyperball {
  Hyperball(HyperplaneForm base, double height, Side side = Side::Both);

  HyperplaneForm base;
  double height;
  Side side;
};

/// Closed halfspace { x : side * <form, x> >= 0 }.
struct Halfspace {
  HyperplaneForm form;
  int side = 1;

  double value(const LorentzVector& x) const;
  bool contains(const LorentzVector& x, double tol = 1e-9) const;
};

double bilinear_form(const LorentzVector& x, const LorentzVector& y);
double bilinear_form(const HyperplaneForm& u, const LorentzVector& x);
double bilinear_form(const HyperplaneForm& u, const HyperplaneForm& v);

PointClass classify_point(const LorentzVector& x);

/// pol(x) for an outer point, unit-normalized. Throws GeometryError otherwise.
HyperplaneForm polar_hyperplane(const LorentzVector& x);

/// Inverse of polar_hyperplane up to scale.
LorentzVector pole(const HyperplaneForm& u);

struct PlaneRelation {
  enum class Kind { Intersecting, Parallel, Ultraparallel };
  Kind kind;
  double distance;  // > 0 only for Ultraparallel
};

PlaneRelation plane_plane_relation(const HyperplaneForm& u, const HyperplaneForm& v);

/// Whether the hyperplane u meets the closed hyperball body.
bool hyperplane_intersects_hyperball(const HyperplaneForm& u, const Hyperball& ball);

/// Unit form of the hyperplane spanned by dim() projective points.
HyperplaneForm hyperplane_through(std::span<const LorentzVector> points);

/// Common point of dim() hyperplanes. Throws GeometryError when the
/// hyperplanes are not in general position.
LorentzVector intersection_point(std::span<const HyperplaneForm> forms);

/// Lorentz isometry of the whole space that sends the unit form u to the last
/// basis vector, so pol(u) becomes the coordinate hyperplane x_n = 0.
Eigen::MatrixXd isometry_to_last_axis(const HyperplaneForm& u);

/// Points on the hyperplane u expressed in an (n-1)-dimensional model of that
/// hyperplane. Each input point must be incident with u.
std::vector<LorentzVector> restrict_to_hyperplane(const HyperplaneForm& u,
                                                  std::span<const LorentzVector> points);

}  // namespace hypack
