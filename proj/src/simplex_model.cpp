#include "hypack/simplex_model.hpp"

#include "hypack/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypack {
namespace {

using std::numbers::pi;

std::string domain_message(const char* what, double value, double guard) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%s = %.17g is outside the admissible open interval (%.4f, 6)%s", what, value,
                p_lower(), guard > 0 ? " (or closer than the evaluation guard to an endpoint)" : "");
  return buf;
}

LorentzVector affine_point(const Coords& x) { return LorentzVector(x).affine(); }

HyperplaneForm inward_face(std::span<const LorentzVector> face, const LorentzVector& opposite) {
  HyperplaneForm u = hyperplane_through(face);
  return bilinear_form(u, opposite) < 0 ? -u : u;
}

template <class T>
std::vector<T> all_but(const std::vector<T>& v, std::size_t skip) {
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != skip) out.push_back(v[i]);
  }
  return out;
}

}  // namespace

double p_lower() { return pi / std::acos(std::sqrt(2.0 / 3.0)); }
double p_upper_computed() { return pi / std::acos(std::sqrt(3.0 / 4.0)); }
double s_upper() { return std::sqrt(8.0 / 3.0); }

void require_p_in_domain(double p, double guard) {
  const double lo = p_lower();
  // Rounding slack so that "endpoint +- guard" itself is admissible.
  const double slack = guard > 0 ? 1e-14 : 0.0;
  if (!std::isfinite(p) || !(p > lo) || !(p < kPUpper) || p - lo < guard - slack ||
      kPUpper - p < guard - slack) {
    throw DomainError(domain_message("p", p, guard));
  }
}

void require_s_in_domain(double s) {
  if (!std::isfinite(s) || !(s > 1.0) || !(s < s_upper())) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "s = %.17g is outside the admissible open interval (1, %.6f)", s,
                  s_upper());
    throw DomainError(buf);
  }
}

double p_to_s(double p) {
  require_p_in_domain(p);
  const double c = std::cos(pi / p);
  return std::sqrt(std::max(0.0, 16.0 * c * c - 10.0)) / c;
}

double s_to_p(double s) {
  require_s_in_domain(s);
  return pi / std::acos(std::sqrt(10.0 / (16.0 - s * s)));
}

SimplexParameter SimplexParameter::from_p(double p) { return {p, p_to_s(p)}; }
SimplexParameter SimplexParameter::from_s(double s) { return {s_to_p(s), s}; }

GramMatrix::GramMatrix(Eigen::MatrixXd entries) : g_(std::move(entries)) {
  if (g_.rows() != g_.cols()) throw std::invalid_argument("GramMatrix: not square");
  for (Eigen::Index i = 0; i < g_.rows(); ++i) {
    if (std::abs(g_(i, i) - 1.0) > 1e-12) throw std::invalid_argument("GramMatrix: diagonal must be 1");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(g_(i, j) - g_(j, i)) > 1e-14) throw std::invalid_argument("GramMatrix: not symmetric");
    }
  }
}

GramMatrix gram_of_forms(std::span<const HyperplaneForm> forms) {
  const auto m = static_cast<Eigen::Index>(forms.size());
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (!forms[i].is_normalized()) throw std::invalid_argument("gram_of_forms: form not normalized");
    for (Eigen::Index j = 0; j <= i; ++j) {
      g(i, j) = g(j, i) = bilinear_form(forms[i], forms[j]);
    }
  }
  return GramMatrix(std::move(g));
}

RegularSimplex4 build_simplex(double s) {
  require_s_in_domain(s);
  RegularSimplex4 out;
  out.s = s;
  out.p = s_to_p(s);

  // Unit vectors of a regular simplex in R^4 scaled by s; pairwise Euclidean
  // products are -s^2/4.
  const double a = std::sqrt(10.0) / 4.0 * s;
  const double c = std::sqrt(5.0) / 4.0 * s;
  const double d = s / 4.0;
  out.vertices = {
      LorentzVector{1.0, 0.0, 0.0, 0.0, s},
      LorentzVector{1.0, 0.0, a, c, -d},
      LorentzVector{1.0, 0.0, -a, c, -d},
      LorentzVector{1.0, -a, 0.0, -c, -d},
      LorentzVector{1.0, a, 0.0, -c, -d},
  };

  auto barycenter = [&](int k) {
    Coords sum = Coords::Zero(5);
    for (int i = 0; i < k; ++i) sum += out.vertices[i].coords();
    return Coords(sum / k);
  };
  const Coords p0 = barycenter(5);
  if ((p0 - Coords::Unit(5, 0)).norm() > 1e-14) throw GeometryError("simplex is not centred");
  out.centers = {LorentzVector{1.0, 0.0, 0.0, 0.0, 0.0}, LorentzVector(barycenter(4)),
                 LorentzVector(barycenter(3)), LorentzVector(barycenter(2))};

  for (const auto& b : out.vertices) out.polar_forms.push_back(polar_hyperplane(b));
  for (std::size_t i = 0; i < 5; ++i) {
    out.facet_forms.push_back(inward_face(all_but(out.vertices, i), out.vertices[i]));
  }

  std::vector<LorentzVector> orthoscheme = out.centers;
  orthoscheme.push_back(out.vertices[0]);
  for (std::size_t i = 0; i < 5; ++i) {
    out.face_forms.push_back(inward_face(all_but(orthoscheme, i), orthoscheme[i]));
  }

  // Feet on pol(B1) along the lines B1 P_j.
  const LorentzVector& b1 = out.vertices[0];
  const HyperplaneForm& beta1 = out.polar_forms[0];
  for (const auto& pj : out.centers) {
    const double t = -bilinear_form(beta1, b1) / bilinear_form(beta1, pj);
    out.feet.push_back(affine_point(b1.coords() + t * pj.coords()));
  }

  out.base_cell = restrict_to_hyperplane(beta1, out.feet);
  for (std::size_t j = 0; j < 4; ++j) {
    out.base_forms.push_back(inward_face(all_but(out.base_cell, j), out.base_cell[j]));
  }
  return out;
}

double dihedral_consistency(double p) {
  const double s = p_to_s(p);
  const double s2 = s * s;
  return std::abs((s2 + 4.0) / (s2 - 16.0) + std::cos(2.0 * pi / p));
}

}  // namespace hypack
