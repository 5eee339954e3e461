#include "hypack/lorentz.hpp"

#include "hypack/errors.hpp"
#include "hypack/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypack {
namespace {

void require_same_size(const Coords& x, const Coords& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size() - 1) + " vs " +
                                std::to_string(y.size() - 1));
  }
}

void require_supported(const Coords& x) {
  if (x.size() != 4 && x.size() != 5) {
    throw std::invalid_argument("unsupported dimension " + std::to_string(x.size() - 1) +
                                " (supported: 3, 4)");
  }
}

Eigen::MatrixXd lorentz_metric(Eigen::Index size) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(size, size);
  j(0, 0) = -1.0;
  return j;
}

// Kernel of a (k x (k+1)) system of full rank.
Coords null_vector(const Eigen::MatrixXd& rows) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= 1e-10 * sv(0)) {
    throw GeometryError("hyperplanes/points are not in general position");
  }
  return svd.matrixV().col(rows.cols() - 1);
}

}  // namespace

double lorentz_product(const Coords& x, const Coords& y) {
  require_same_size(x, y);
  return -x[0] * y[0] + x.tail(x.size() - 1).dot(y.tail(y.size() - 1));
}

LorentzVector::LorentzVector(Coords coords) : x_(std::move(coords)) {
  require_supported(x_);
  if (!x_.allFinite()) throw std::invalid_argument("LorentzVector: non-finite coordinate");
  if (x_.norm() == 0.0) throw std::invalid_argument("LorentzVector: zero vector");
}

LorentzVector::LorentzVector(std::initializer_list<double> coords)
    : LorentzVector(Coords(Eigen::Map<const Coords>(coords.begin(), static_cast<Eigen::Index>(coords.size())))) {}

LorentzVector LorentzVector::canonical() const {
  Coords v = x_ / x_.norm();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return LorentzVector(std::move(v));
}

LorentzVector LorentzVector::affine() const {
  if (std::abs(x_[0]) <= 1e-14 * x_.norm()) {
    throw GeometryError("point lies at infinity of the affine chart");
  }
  return LorentzVector(Coords(x_ / x_[0]));
}

HyperplaneForm HyperplaneForm::normalized(Coords coeffs) {
  require_supported(coeffs);
  const double q = lorentz_product(coeffs, coeffs);
  if (!(q > 0.0)) throw GeometryError("form is not spacelike; no hyperbolic hyperplane");
  coeffs /= std::sqrt(q);
  return HyperplaneForm(std::move(coeffs), true);
}

HyperplaneForm HyperplaneForm::raw(Coords coeffs) {
  require_supported(coeffs);
  if (coeffs.norm() == 0.0) throw std::invalid_argument("HyperplaneForm: zero form");
  return HyperplaneForm(std::move(coeffs), false);
}

Coords HyperplaneForm::covector() const {
  Coords a = u_;
  a[0] = -a[0];
  return a;
}

HyperplaneForm HyperplaneForm::operator-() const { return HyperplaneForm(-u_, normalized_); }

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::Proper: return "proper";
    case PointClass::Boundary: return "boundary";
    case PointClass::Outer: return "outer";
  }
  return "?";
}

Hyperball::Hyperball(HyperplaneForm base_form, double h, Side s)
    : base(std::move(base_form)), height(h), side(s) {
  if (!base.is_normalized()) throw std::invalid_argument("Hyperball: base form must be normalized");
  if (!(height >= 0.0) || !std::isfinite(height)) throw std::invalid_argument("Hyperball: height must be >= 0");
}

double Halfspace::value(const LorentzVector& x) const { return side * bilinear_form(form, x); }

bool Halfspace::contains(const LorentzVector& x, double tol) const {
  return value(x) >= -tol * form.coeffs().norm() * x.coords().norm();
}

double bilinear_form(const LorentzVector& x, const LorentzVector& y) {
  return lorentz_product(x.coords(), y.coords());
}

double bilinear_form(const HyperplaneForm& u, const LorentzVector& x) {
  return lorentz_product(u.coeffs(), x.coords());
}

double bilinear_form(const HyperplaneForm& u, const HyperplaneForm& v) {
  return lorentz_product(u.coeffs(), v.coeffs());
}

PointClass classify_point(const LorentzVector& x) {
  const double q = bilinear_form(x, x);
  const double tol = kClassifyTol * x.coords().squaredNorm();
  if (q < -tol) return PointClass::Proper;
  if (q > tol) return PointClass::Outer;
  return PointClass::Boundary;
}

HyperplaneForm polar_hyperplane(const LorentzVector& x) {
  if (classify_point(x) != PointClass::Outer) {
    throw GeometryError("no real polar hyperplane: point is not outer");
  }
  return HyperplaneForm::normalized(x.coords());
}

LorentzVector pole(const HyperplaneForm& u) { return LorentzVector(u.coeffs()); }

PlaneRelation plane_plane_relation(const HyperplaneForm& u, const HyperplaneForm& v) {
  const double c = std::abs(bilinear_form(u, v));
  if (c < 1.0 - kPlaneTol) return {PlaneRelation::Kind::Intersecting, 0.0};
  if (c <= 1.0 + kPlaneTol) return {PlaneRelation::Kind::Parallel, 0.0};
  return {PlaneRelation::Kind::Ultraparallel, arccosh_safe(c)};
}

bool hyperplane_intersects_hyperball(const HyperplaneForm& u, const Hyperball& ball) {
  if (!u.is_normalized()) throw std::invalid_argument("hyperplane form must be normalized");
  const auto rel = plane_plane_relation(u, ball.base);
  if (rel.kind != PlaneRelation::Kind::Ultraparallel) return true;

  if (ball.side != Side::Both) {
    // Foot of the common perpendicular on u, future-oriented.
    const double c = bilinear_form(u, ball.base);
    Coords foot = ball.base.coeffs() - c * u.coeffs();
    if (foot[0] < 0) foot = -foot;
    const bool plus = lorentz_product(foot, ball.base.coeffs()) > 0.0;
    if (plus != (ball.side == Side::Plus)) return false;
  }
  return rel.distance < ball.height - kTangencyTol;
}

HyperplaneForm hyperplane_through(std::span<const LorentzVector> points) {
  if (points.empty()) throw std::invalid_argument("hyperplane_through: no points");
  const auto size = points.front().coords().size();
  if (static_cast<Eigen::Index>(points.size()) != size - 1) {
    throw std::invalid_argument("hyperplane_through: need exactly dim points");
  }
  const Eigen::MatrixXd j = lorentz_metric(size);
  Eigen::MatrixXd rows(size - 1, size);
  for (std::size_t i = 0; i < points.size(); ++i) {
    require_same_size(points[i].coords(), points.front().coords());
    rows.row(static_cast<Eigen::Index>(i)) = (j * points[i].coords()).transpose();
  }
  return HyperplaneForm::normalized(null_vector(rows));
}

LorentzVector intersection_point(std::span<const HyperplaneForm> forms) {
  if (forms.empty()) throw std::invalid_argument("intersection_point: no forms");
  const auto size = forms.front().coeffs().size();
  if (static_cast<Eigen::Index>(forms.size()) != size - 1) {
    throw std::invalid_argument("intersection_point: need exactly dim forms");
  }
  Eigen::MatrixXd rows(size - 1, size);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    require_same_size(forms[i].coeffs(), forms.front().coeffs());
    rows.row(static_cast<Eigen::Index>(i)) = forms[i].covector().transpose();
  }
  return LorentzVector(null_vector(rows));
}

Eigen::MatrixXd isometry_to_last_axis(const HyperplaneForm& u) {
  if (!u.is_normalized()) throw std::invalid_argument("isometry_to_last_axis: form must be normalized");
  const Eigen::Index size = u.coeffs().size();
  const Eigen::MatrixXd j = lorentz_metric(size);
  Coords e = Coords::Zero(size);
  e[size - 1] = 1.0;
  if ((u.coeffs() - e).norm() < 1e-15) return Eigen::MatrixXd::Identity(size, size);

  // Lorentz reflection in w: x -> x - 2 <w,x>/<w,w> w. With w = u - e it maps
  // u to e; with w = u + e it maps u to -e and the sign is fixed afterwards.
  Coords w = u.coeffs() - e;
  double flip = 1.0;
  if (std::abs(lorentz_product(w, w)) < 1e-6) {
    w = u.coeffs() + e;
    flip = -1.0;
  }
  const double q = lorentz_product(w, w);
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(size, size) - (2.0 / q) * w * (j * w).transpose();
  if (flip < 0) r.row(size - 1) *= -1.0;
  return r;
}

std::vector<LorentzVector> restrict_to_hyperplane(const HyperplaneForm& u,
                                                  std::span<const LorentzVector> points) {
  const Eigen::MatrixXd m = isometry_to_last_axis(u);
  std::vector<LorentzVector> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    Coords y = m * x.coords();
    const Eigen::Index n = y.size() - 1;
    if (std::abs(y[n]) > 1e-9 * y.norm()) {
      throw GeometryError("restrict_to_hyperplane: point is not on the hyperplane");
    }
    Coords z = y.head(n);
    if (z[0] < 0) z = -z;
    out.emplace_back(std::move(z));
  }
  return out;
}

}  // namespace hypack
