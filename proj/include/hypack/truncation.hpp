#pragma once

// Convex polytopes of the projective model given by halfspaces, and the
// cutting procedure that splits a cell bounded by hyperball base planes
// into truncated simplices.
//
// Sizes are desk scale (a few dozen halfspaces), so vertices come from
// brute-force enumeration over all dim-subsets of the bounding hyperplanes.

#include "hypack/lorentz.hpp"

#include <span>
#include <string>
#include <vector>

namespace hypack {

inline constexpr double kVertexTol = 1e-9;

struct ProjectivePolytope {
  int dim = 0;
  std::vector<Halfspace> halfspaces;
  /// Affine representatives (x0 = 1), sorted lexicographically.
  std::vector<LorentzVector> vertices;

  /// Indices of halfspaces whose tight vertices span a facet.
  std::vector<int> facets() const;
};

/// Builds the polytope cut out by the halfspaces. Throws GeometryError when a
/// feasible intersection point lies at or beyond infinity of the affine chart
/// (unbounded region) or when the intersection is empty.
ProjectivePolytope vertex_enumeration(std::span<const Halfspace> halfspaces, int dim);

/// Vertices of P classified Outer.
int outer_vertex_count(const ProjectivePolytope& poly);

/// An outer point A together with the planes through it.
struct OuterVertexRecord {
  LorentzVector vertex;
  /// Indices into the plane list the record was built from.
  std::vector<int> incident_base_planes;
  std::vector<HyperplaneForm> incident_forms;
};

/// Outer vertices of P, each with the halfspaces tight at it.
std::vector<OuterVertexRecord> outer_vertices(const ProjectivePolytope& poly);

/// Outer common points of non-adjacent facet base planes whose polar
/// hyperplanes cut P into two parts with nonempty interior. Adjacent means
/// some vertex of P lies on all of the planes. The size of the result is
/// N(P), the quantity that must drop with every cut.
std::vector<OuterVertexRecord> outer_points(const ProjectivePolytope& poly,
                                            std::span<const HyperplaneForm> base_planes);

/// Splits P along pol(A). The first piece lies on the side of A. Checks that
/// pol(A) is orthogonal to every incident plane of the record within 1e-10.
/// Throws GeometryError when A is not outer or pol(A) does not split P.
std::pair<ProjectivePolytope, ProjectivePolytope> cut_at_outer_vertex(const ProjectivePolytope& poly,
                                                                      const OuterVertexRecord& a);

/// Cuts every outer vertex of P by its polar hyperplane, keeping the part
/// away from the vertex.
ProjectivePolytope truncate_outer_vertices(const ProjectivePolytope& poly);

enum class CutPolicy {
  /// Most incident base planes, then largest clearance to the non-incident
  /// hyperballs, then lexicographic order of the point.
  MostIncidentThenClearance,
  /// Most incident base planes, then lexicographic order of the point.
  MostIncidentThenLexicographic,
};

struct CutEvent {
  LorentzVector cut_vertex;
  std::vector<int> incident_base_planes;
  int n_before = 0;
  int n_after_first = 0;
  int n_after_second = 0;
  /// min(d - h) over hyperballs on non-incident base planes.
  double clearance = 0.0;
  bool lemma31_checked = false;
};

struct Decomposition {
  std::vector<ProjectivePolytope> pieces;
  std::vector<CutEvent> events;
};

/// Recursively cuts P until no outer point remains, verifying on every cut
/// that the cutting plane avoids all congruent hyperballs of height h whose
/// base plane misses A, and that N strictly decreases. P must have no outer
/// vertices. Pieces are ordered by their smallest vertex.
Decomposition decompose(const ProjectivePolytope& poly, std::span<const HyperplaneForm> base_planes,
                        double height, CutPolicy policy = CutPolicy::MostIncidentThenClearance);

/// Every vertex proper, exactly dim+1 independent facets off the base planes,
/// at most dim+1 facets on base planes.
bool is_truncated_simplex(const ProjectivePolytope& poly, std::span<const HyperplaneForm> base_planes);

/// Input cell for decompose: halfspaces, which of them carry hyperballs,
/// and the common height.
struct DecompositionFixture {
  int dim = 4;
  std::vector<Halfspace> halfspaces;
  std::vector<int> base_plane_indices;
  double height = 0.0;

  std::vector<HyperplaneForm> base_planes() const;
};

/// Regular simplex b1..b5 truncated by the five polars, with h = h(p(s)).
DecompositionFixture regular_simplex_fixture(double s);

/// Two regular simplices glued along the facet opposite b5, truncated by the
/// polars of all six vertices.
DecompositionFixture glued_simplices_fixture(double s);

}  // namespace hypack
