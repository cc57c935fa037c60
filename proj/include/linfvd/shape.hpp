// SPDX-License-Identifier: Apache-2.0
#pragma once

// Validated orthogonal shapes: rectilinear polygons with holes (2D) and
// manifold orthogonal polyhedra (3D), split into boundary sites.

#include <map>
#include <optional>
#include <vector>

#include "linfvd/geometry.hpp"
#include "linfvd/polygon.hpp"

namespace linfvd {

/// One boundary edge (2D) or facet (3D). Sites are numbered in document
/// order and the id doubles as the priority: larger id wins ties between
/// sites on a common hull.
struct Site {
  int id = 0;
  AffineHull hull;
  /// +1 if the interior lies towards larger hull.axis coordinates.
  int sigma = 1;
  /// 2D: endpoints in boundary order (interior on the left of a->b).
  Point a, b;
  /// 3D: facet outline in in-plane coordinates (plane_axes order), CCW.
  Cycle facet;
  Aabb bounds;

  int priority() const { return id; }
  /// Closed membership test.
  bool contains_point(const Point& p) const;
};

/// Shape vertex with its incident sites (2 in 2D, 3 in 3D), sorted by id.
struct ShapeCorner {
  Point position;
  std::vector<int> sites;
  bool reflex = false;
};

/// input = unit * factor + offset (componentwise).
struct ScaleRecord {
  Point offset;
  Scalar factor = 1;

  Point to_input(const Point& unit) const;
  Point to_unit(const Point& input) const;
  Scalar distance_to_input(const Scalar& d) const { return d * factor; }
};

/// Facet as it appears in a 3D document.
struct FacetSpec {
  int axis = 0;
  Scalar offset;
  Cycle outer;  // in-plane coordinates, ascending remaining axes
  int interior_sign = 1;
};

class OrthogonalShape {
 public:
  int dim = 2;
  std::vector<Site> sites;
  /// 2D: normalized boundary cycles (outer CCW first, holes CW).
  Polygon polygon;
  /// 3D: normalized facets (outer CCW in-plane).
  std::vector<FacetSpec> facets;
  std::vector<ShapeCorner> corners;
  Aabb bounds;
  ScaleRecord scale;

  int hole_count() const;
  std::size_t vertex_count() const;
  Containment locate(const Point& p) const;
  /// Closed point membership.
  bool contains(const Point& p) const { return locate(p) != Containment::Outside; }
  const ShapeCorner* corner_at(const Point& p) const;
  /// Smallest square/cube centered on the bounding box.
  AxisBox root_box() const;

  void index_corners();

 private:
  std::map<Point, std::size_t> corner_index_;
};

/// Builds and validates a 2D shape. Cycles may be given in either
/// orientation; an explicitly repeated closing vertex is accepted.
OrthogonalShape build_shape_2d(Cycle outer, std::vector<Cycle> holes);

/// Builds and validates a 3D shape from its facets.
OrthogonalShape build_shape_3d(std::vector<FacetSpec> facets);

/// Maps the bounding square/cube onto [0,1]^d. Throws Degenerate.
OrthogonalShape scale_to_unit(const OrthogonalShape& shape);

/// Reflex (270 degree) vertices of a 2D shape. Throws DimensionMismatch in 3D.
std::vector<Point> reflex_vertices(const OrthogonalShape& shape);

struct SiteCorner {
  /// Shared endpoint (2D) or shared edge (3D, as two points).
  Point first, second;
  bool reflex = false;
};

/// Shared geometry of two adjacent sites and its convexity. Throws NotAdjacent.
SiteCorner site_corner(const OrthogonalShape& shape, int s1, int s2);

/// Contact points of two sites (both endpoints of the shared part plus
/// probes in between); empty if they do not touch.
std::vector<Point> shared_points(const Site& a, const Site& b);

/// Validates one planar rectilinear cycle; `what` names it in diagnostics.
/// Returns the cycle with an explicitly repeated closing vertex removed.
Cycle validate_cycle(Cycle c, const std::string& what);

/// Perturbed-point containment used by ray casting: true iff the point
/// (u + e, v + e^2) lies inside the cycle for infinitesimal e > 0.
bool cycle_contains_perturbed(const Cycle& c, const Scalar& u, const Scalar& v);

}  // namespace linfvd
