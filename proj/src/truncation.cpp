#include "hypack/truncation.hpp"

#include "hypack/density.hpp"
#include "hypack/errors.hpp"
#include "hypack/simplex_model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

namespace hypack {
namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string subset_string(const std::vector<int>& idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << '}';
  return os.str();
}

bool lex_less(const LorentzVector& a, const LorentzVector& b) {
  const Coords& x = a.coords();
  const Coords& y = b.coords();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

bool same_point(const LorentzVector& a, const LorentzVector& b) {
  return (a.canonical().coords() - b.canonical().coords()).norm() <= kVertexTol;
}

// Signed incidence of a unit form with a Euclidean-normalized point.
double incidence(const HyperplaneForm& u, const LorentzVector& x) {
  return bilinear_form(u, x) / (u.coeffs().norm() * x.coords().norm());
}

bool on_plane(const HyperplaneForm& u, const LorentzVector& x) { return std::abs(incidence(u, x)) <= kVertexTol; }

bool same_plane(const HyperplaneForm& u, const HyperplaneForm& v) {
  const Coords a = u.coeffs().normalized();
  const Coords b = v.coeffs().normalized();
  return (a - b).norm() <= kVertexTol || (a + b).norm() <= kVertexTol;
}

int affine_rank(const std::vector<LorentzVector>& pts, int size) {
  if (pts.empty()) return 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(pts.size()), size);
  for (std::size_t i = 0; i < pts.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = pts[i].coords().transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

// Does the hyperplane u leave vertices strictly on both sides?
bool splits(const ProjectivePolytope& poly, const HyperplaneForm& u) {
  bool plus = false, minus = false;
  for (const auto& v : poly.vertices) {
    const double t = incidence(u, v);
    if (t > kVertexTol) plus = true;
    if (t < -kVertexTol) minus = true;
  }
  return plus && minus;
}

// Enumerates and keeps only the halfspaces that support facets, once each.
ProjectivePolytope reduced_polytope(std::span<const Halfspace> halfspaces, int dim) {
  ProjectivePolytope full = vertex_enumeration(halfspaces, dim);
  ProjectivePolytope out;
  out.dim = dim;
  out.vertices = full.vertices;
  for (int i : full.facets()) {
    const Halfspace& h = full.halfspaces[i];
    const bool dup = std::any_of(out.halfspaces.begin(), out.halfspaces.end(), [&](const Halfspace& g) {
      return same_plane(g.form, h.form);
    });
    if (!dup) out.halfspaces.push_back(h);
  }
  return out;
}

std::vector<int> facet_base_planes(const ProjectivePolytope& poly, std::span<const HyperplaneForm> base_planes) {
  std::vector<int> out;
  const std::vector<int> facets = poly.facets();
  for (int k = 0; k < static_cast<int>(base_planes.size()); ++k) {
    for (int f : facets) {
      if (same_plane(poly.halfspaces[f].form, base_planes[k])) {
        out.push_back(k);
        break;
      }
    }
  }
  return out;
}

double clearance(const HyperplaneForm& alpha, const OuterVertexRecord& a,
                 std::span<const HyperplaneForm> base_planes, double height) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < static_cast<int>(base_planes.size()); ++k) {
    if (std::find(a.incident_base_planes.begin(), a.incident_base_planes.end(), k) !=
        a.incident_base_planes.end()) {
      continue;
    }
    const PlaneRelation rel = plane_plane_relation(alpha, base_planes[k]);
    const double d = rel.kind == PlaneRelation::Kind::Ultraparallel ? rel.distance : 0.0;
    best = std::min(best, d - height);
  }
  return best;
}

}  // namespace

std::vector<int> ProjectivePolytope::facets() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(halfspaces.size()); ++i) {
    std::vector<LorentzVector> tight;
    for (const auto& v : vertices) {
      if (on_plane(halfspaces[i].form, v)) tight.push_back(v);
    }
    if (affine_rank(tight, dim + 1) == dim) out.push_back(i);
  }
  return out;
}

ProjectivePolytope vertex_enumeration(std::span<const Halfspace> halfspaces, int dim) {
  if (dim != 3 && dim != 4) throw std::invalid_argument("vertex_enumeration: dim must be 3 or 4");
  const int m = static_cast<int>(halfspaces.size());
  if (m < dim + 1) throw std::invalid_argument("vertex_enumeration: need at least dim+1 halfspaces");
  for (const auto& h : halfspaces) {
    if (h.form.dim() != dim) throw std::invalid_argument("vertex_enumeration: dimension mismatch");
    if (h.side != 1 && h.side != -1) throw std::invalid_argument("vertex_enumeration: side must be +1 or -1");
  }

  std::vector<Coords> rows;
  for (const auto& h : halfspaces) rows.push_back(h.side * h.form.covector() / h.form.coeffs().norm());

  ProjectivePolytope poly;
  poly.dim = dim;
  poly.halfspaces.assign(halfspaces.begin(), halfspaces.end());

  for_each_subset(m, dim, [&](const std::vector<int>& idx) {
    Eigen::MatrixXd a(dim, dim + 1);
    for (int r = 0; r < dim; ++r) a.row(r) = rows[idx[r]].transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(dim - 1) <= 1e-10 * sv(0)) return;
    Coords x = svd.matrixV().col(dim);
    for (double sign : {1.0, -1.0}) {
      const Coords y = sign * x;
      bool feasible = true;
      for (const auto& r : rows) {
        if (r.dot(y) < -kVertexTol) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      if (y[0] <= kVertexTol) {
        throw GeometryError("vertex_enumeration: region is unbounded in the affine chart; subset " +
                            subset_string(idx) + " meets it at infinity");
      }
      LorentzVector v = LorentzVector(y).affine();
      const bool dup = std::any_of(poly.vertices.begin(), poly.vertices.end(),
                                   [&](const LorentzVector& w) { return same_point(v, w); });
      if (!dup) poly.vertices.push_back(std::move(v));
    }
  });
  if (poly.vertices.empty()) throw GeometryError("vertex_enumeration: halfspaces have no common vertex");
  std::sort(poly.vertices.begin(), poly.vertices.end(), lex_less);
  return poly;
}

int outer_vertex_count(const ProjectivePolytope& poly) {
  return static_cast<int>(std::count_if(poly.vertices.begin(), poly.vertices.end(), [](const LorentzVector& v) {
    return classify_point(v) == PointClass::Outer;
  }));
}

std::vector<OuterVertexRecord> outer_vertices(const ProjectivePolytope& poly) {
  std::vector<OuterVertexRecord> out;
  for (const auto& v : poly.vertices) {
    if (classify_point(v) != PointClass::Outer) continue;
    OuterVertexRecord rec{v, {}, {}};
    for (int i = 0; i < static_cast<int>(poly.halfspaces.size()); ++i) {
      if (on_plane(poly.halfspaces[i].form, v)) {
        rec.incident_base_planes.push_back(i);
        rec.incident_forms.push_back(poly.halfspaces[i].form);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<OuterVertexRecord> outer_points(const ProjectivePolytope& poly,
                                            std::span<const HyperplaneForm> base_planes) {
  const std::vector<int> facet_bases = facet_base_planes(poly, base_planes);
  std::vector<OuterVertexRecord> out;
  for_each_subset(static_cast<int>(facet_bases.size()), poly.dim, [&](const std::vector<int>& idx) {
    std::vector<HyperplaneForm> forms;
    for (int i : idx) forms.push_back(base_planes[facet_bases[i]]);
    std::optional<LorentzVector> found;
    try {
      found = intersection_point(forms);
    } catch (const GeometryError&) {
      return;  // planes not in general position
    }
    const LorentzVector a = found->canonical();
    if (classify_point(a) != PointClass::Outer) return;
    if (std::any_of(out.begin(), out.end(), [&](const OuterVertexRecord& r) { return same_point(r.vertex, a); })) {
      return;
    }

    OuterVertexRecord rec{a, {}, {}};
    for (int k : facet_bases) {
      if (on_plane(base_planes[k], a)) {
        rec.incident_base_planes.push_back(k);
        rec.incident_forms.push_back(base_planes[k]);
      }
    }
    const bool adjacent = std::any_of(poly.vertices.begin(), poly.vertices.end(), [&](const LorentzVector& v) {
      return std::all_of(rec.incident_forms.begin(), rec.incident_forms.end(),
                         [&](const HyperplaneForm& u) { return on_plane(u, v); });
    });
    if (adjacent) return;
    if (!splits(poly, polar_hyperplane(a))) return;
    out.push_back(std::move(rec));
  });
  std::sort(out.begin(), out.end(),
            [](const OuterVertexRecord& x, const OuterVertexRecord& y) { return lex_less(x.vertex, y.vertex); });
  return out;
}

std::pair<ProjectivePolytope, ProjectivePolytope> cut_at_outer_vertex(const ProjectivePolytope& poly,
                                                                      const OuterVertexRecord& a) {
  if (classify_point(a.vertex) != PointClass::Outer) {
    throw GeometryError(std::string("cut_at_outer_vertex: point is ") + to_string(classify_point(a.vertex)) +
                        ", not outer");
  }
  const HyperplaneForm alpha = polar_hyperplane(a.vertex);
  for (const auto& u : a.incident_forms) {
    if (std::abs(bilinear_form(alpha, u)) > 1e-10) {
      throw GeometryError("cut_at_outer_vertex: polar hyperplane is not orthogonal to an incident plane");
    }
  }
  if (!splits(poly, alpha)) throw GeometryError("cut_at_outer_vertex: polar hyperplane does not split the polytope");

  const int side_a = bilinear_form(alpha, a.vertex) > 0 ? 1 : -1;
  std::vector<Halfspace> first = poly.halfspaces;
  std::vector<Halfspace> second = poly.halfspaces;
  first.push_back({alpha, side_a});
  second.push_back({alpha, -side_a});
  return {reduced_polytope(first, poly.dim), reduced_polytope(second, poly.dim)};
}

ProjectivePolytope truncate_outer_vertices(const ProjectivePolytope& poly) {
  std::vector<Halfspace> hs = poly.halfspaces;
  for (const auto& v : poly.vertices) {
    if (classify_point(v) != PointClass::Outer) continue;
    const HyperplaneForm alpha = polar_hyperplane(v);
    hs.push_back({alpha, bilinear_form(alpha, v) > 0 ? -1 : 1});
  }
  return reduced_polytope(hs, poly.dim);
}

namespace {

struct Decomposer {
  std::span<const HyperplaneForm> base_planes;
  double height;
  CutPolicy policy;
  Decomposition result;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "decompose: " << what << " (after " << result.events.size() << " cuts)";
    throw GeometryError(os.str());
  }

  void run(const ProjectivePolytope& poly) {
    const std::vector<OuterVertexRecord> candidates = outer_points(poly, base_planes);
    const int n = static_cast<int>(candidates.size());
    if (n == 0) {
      if (!is_truncated_simplex(poly, base_planes)) fail("piece without outer points is not a truncated simplex");
      result.pieces.push_back(poly);
      return;
    }

    // Candidates are already in lexicographic order, so a stable pick keeps
    // the earliest one on ties.
    int best = 0;
    double best_clearance = -std::numeric_limits<double>::infinity();
    std::vector<double> clear(n);
    for (int i = 0; i < n; ++i) {
      clear[i] = clearance(polar_hyperplane(candidates[i].vertex), candidates[i], base_planes, height);
    }
    for (int i = 0; i < n; ++i) {
      const auto inc = candidates[i].incident_base_planes.size();
      const auto best_inc = candidates[best].incident_base_planes.size();
      bool better = inc > best_inc;
      if (inc == best_inc && policy == CutPolicy::MostIncidentThenClearance) {
        better = clear[i] > best_clearance + kVertexTol;
      }
      if (i == 0 || better) {
        best = i;
        best_clearance = clear[i];
      }
    }
    const OuterVertexRecord& a = candidates[best];
    const HyperplaneForm alpha = polar_hyperplane(a.vertex);

    for (int k = 0; k < static_cast<int>(base_planes.size()); ++k) {
      if (on_plane(base_planes[k], a.vertex)) continue;
      if (hyperplane_intersects_hyperball(alpha, Hyperball(base_planes[k], height, Side::Both))) {
        fail("cutting plane meets the hyperball on base plane " + std::to_string(k));
      }
    }

    auto [first, second] = cut_at_outer_vertex(poly, a);
    CutEvent ev{a.vertex, a.incident_base_planes, n, 0, 0, clear[best], true};
    ev.n_after_first = static_cast<int>(outer_points(first, base_planes).size());
    ev.n_after_second = static_cast<int>(outer_points(second, base_planes).size());
    result.events.push_back(ev);
    if (ev.n_after_first >= n || ev.n_after_second >= n) fail("number of outer points did not decrease");
    run(first);
    run(second);
  }
};

}  // namespace

Decomposition decompose(const ProjectivePolytope& poly, std::span<const HyperplaneForm> base_planes, double height,
                        CutPolicy policy) {
  if (!(height >= 0.0) || !std::isfinite(height)) throw std::invalid_argument("decompose: height must be >= 0");
  for (const auto& b : base_planes) {
    if (!b.is_normalized()) throw std::invalid_argument("decompose: base planes must be normalized");
  }
  if (outer_vertex_count(poly) != 0) {
    throw GeometryError("decompose: polytope has outer vertices; truncate them first");
  }
  Decomposer d{base_planes, height, policy, {}};
  d.run(poly);
  std::sort(d.result.pieces.begin(), d.result.pieces.end(),
            [](const ProjectivePolytope& x, const ProjectivePolytope& y) {
              return lex_less(x.vertices.front(), y.vertices.front());
            });
  return d.result;
}

bool is_truncated_simplex(const ProjectivePolytope& poly, std::span<const HyperplaneForm> base_planes) {
  for (const auto& v : poly.vertices) {
    if (classify_point(v) != PointClass::Proper) return false;
  }
  int on_base = 0;
  std::vector<Coords> others;
  for (int f : poly.facets()) {
    const auto& u = poly.halfspaces[f].form;
    const bool base = std::any_of(base_planes.begin(), base_planes.end(),
                                  [&](const HyperplaneForm& b) { return same_plane(u, b); });
    if (base) {
      ++on_base;
    } else {
      others.push_back(u.coeffs());
    }
  }
  if (static_cast<int>(others.size()) != poly.dim + 1 || on_base > poly.dim + 1) return false;
  Eigen::MatrixXd m(poly.dim + 1, poly.dim + 1);
  for (int i = 0; i <= poly.dim; ++i) m.row(i) = others[i].normalized().transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return lu.rank() == poly.dim + 1;
}

std::vector<HyperplaneForm> DecompositionFixture::base_planes() const {
  std::vector<HyperplaneForm> out;
  for (int i : base_plane_indices) {
    if (i < 0 || i >= static_cast<int>(halfspaces.size())) throw std::out_of_range("base plane index out of range");
    out.push_back(halfspaces[i].form);
  }
  return out;
}

namespace {

Halfspace facing(const HyperplaneForm& u, const LorentzVector& inside) {
  return {u, bilinear_form(u, inside) > 0 ? 1 : -1};
}

Coords reflect(const Coords& x, const HyperplaneForm& mirror) {
  return x - 2.0 * lorentz_product(x, mirror.coeffs()) * mirror.coeffs();
}

}  // namespace

DecompositionFixture regular_simplex_fixture(double s) {
  const RegularSimplex4 g = build_simplex(s);
  DecompositionFixture fx;
  fx.dim = 4;
  for (const auto& f : g.facet_forms) fx.halfspaces.push_back({f, 1});
  for (const auto& b : g.polar_forms) {
    fx.base_plane_indices.push_back(static_cast<int>(fx.halfspaces.size()));
    fx.halfspaces.push_back(facing(b, g.centers[0]));
  }
  fx.height = height(g.p);
  return fx;
}

DecompositionFixture glued_simplices_fixture(double s) {
  const RegularSimplex4 g = build_simplex(s);
  const HyperplaneForm& mirror = g.facet_forms[4];  // facet opposite b5
  const LorentzVector inside = g.centers[1];        // centre of that facet
  const LorentzVector b5r(reflect(g.vertices[4].coords(), mirror));

  DecompositionFixture fx;
  fx.dim = 4;
  for (int j = 0; j < 4; ++j) {
    fx.halfspaces.push_back(facing(g.facet_forms[j], inside));
    fx.halfspaces.push_back(facing(HyperplaneForm::normalized(reflect(g.facet_forms[j].coeffs(), mirror)), inside));
  }
  std::vector<HyperplaneForm> bases = g.polar_forms;
  bases.push_back(polar_hyperplane(b5r));
  for (const auto& b : bases) {
    fx.base_plane_indices.push_back(static_cast<int>(fx.halfspaces.size()));
    fx.halfspaces.push_back(facing(b, inside));
  }
  fx.height = height(g.p);
  return fx;
}

}  // namespace hypack
