// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact tests on sites: oriented zones, restricted distance, zone/cell and
// site/cell intersection, bisectors, point location and Voronoi vertices.

#include <optional>
#include <vector>

#include "linfvd/bvh.hpp"
#include "linfvd/shape.hpp"

namespace linfvd {

enum class BvhMode { Auto, On, Off };

const char* bvh_mode_name(BvhMode m);
BvhMode parse_bvh_mode(const std::string& s);

/// Query structures over a shape: per-facet hierarchies (3D) and the
/// polygon hierarchy with per-rectangle site lists (2D). The shape must
/// outlive the index.
class ShapeIndex {
 public:
  ShapeIndex(const OrthogonalShape& shape, BvhMode mode);

  const OrthogonalShape& shape() const { return *shape_; }
  const Site& site(int id) const { return shape_->sites[static_cast<std::size_t>(id)]; }
  int dim() const { return shape_->dim; }
  BvhMode mode() const { return mode_; }
  /// Whether facet queries go through the hierarchy.
  bool facet_bvh() const { return mode_ != BvhMode::Off; }
  /// Whether candidate gathering for a parent of the given size uses the
  /// polygon hierarchy (2D only).
  bool use_candidate_bvh(std::size_t parent_active) const;

  /// Closed (or open, if strict) in-plane box against a 3D facet.
  bool facet_meets_box(int site, const Aabb& plane_box, bool strict) const;
  /// Superset of the 2D sites meeting the closed box, ascending ids.
  std::vector<int> sites_near(const Aabb& box) const;

  const Bvh& polygon_bvh() const { return polygon_bvh_; }
  const Bvh& facet_bvh(int site) const { return facet_bvhs_.at(static_cast<std::size_t>(site)); }
  /// Rectangle cover of a 3D facet in its plane coordinates.
  const std::vector<Aabb>& facet_rects(int site) const {
    return facet_rects_.at(static_cast<std::size_t>(site));
  }

 private:
  const OrthogonalShape* shape_;
  BvhMode mode_;
  Bvh polygon_bvh_;
  std::vector<std::vector<int>> rect_sites_;
  std::vector<Bvh> facet_bvhs_;
  std::vector<std::vector<Aabb>> facet_rects_;
};

/// Closed in-plane box against a closed rectilinear polygon, by edges.
bool polygon_meets_box(const Cycle& c, const Aabb& box, bool strict);

bool in_halfspace(const Point& p, const Site& s);

/// p in Z(s). 3D sites need an index (MissingBvh otherwise).
bool in_zone(const Point& p, const Site& s, const ShapeIndex* ctx = nullptr);

/// D_s(p): distance to aff(s) inside the oriented zone, nullopt (infinite) outside.
std::optional<Scalar> restricted_distance(const Point& p, const Site& s,
                                          const ShapeIndex* ctx = nullptr);

/// Z(s) meets the closed cell.
bool zone_in_cell(const Site& s, const AxisBox& c, const ShapeIndex* ctx = nullptr);

/// Z+(s) = Z(s) within H(s) meets the closed cell.
bool oriented_zone_in_cell(const Site& s, const AxisBox& c, const ShapeIndex* ctx = nullptr);

/// Closed site meets the closed cell, or the open cell if strict.
bool is_intersecting(const Site& s, const AxisBox& c, bool strict,
                     const ShapeIndex* ctx = nullptr);
bool is_intersecting(const Site& s, const Aabb& box, bool strict,
                     const ShapeIndex* ctx = nullptr);

/// Solution set of  sigma_s * (x[k_s] - c_s) = t  over (x, t).
struct EquidistantSolution {
  bool consistent = false;
  int free_dims = 0;  // 0: unique point, 1: a line, ...
  Point point;        // a particular solution (x part)
  Scalar distance;    // its t
  /// Direction vectors of the solution space, x part then t.
  std::vector<std::vector<Scalar>> directions;
};

EquidistantSolution solve_equidistant(const std::vector<const Site*>& sites, int dim);

struct Bisector {
  enum class Kind { AxisParallel, Diagonal };
  Kind kind = Kind::AxisParallel;
  /// sum coef[i] * x[i] == rhs
  std::array<Scalar, 3> coef{};
  Scalar rhs;
  int first = -1;
  int second = -1;

  bool contains(const Point& p) const;
};

std::optional<Bisector> affine_bisector(const Site& s1, const Site& s2);

/// Unique point equidistant (under D) to all sites, inside the closed cell
/// and every oriented zone.
std::optional<Point> voronoi_vertex_test(const AxisBox& c, const std::vector<const Site*>& sites,
                                         const ShapeIndex* ctx = nullptr);

/// Point membership in the closed shape from the candidate sites T alone.
/// Throws InternalInconsistency if no candidate has p in its zone.
bool location_test(const Point& p, const std::vector<int>& candidates, const ShapeIndex& ctx);

/// Whether p + eps*v lies in Z(s) and H(s) for all small eps > 0.
bool zone_along(const Point& p, const Site& s, const std::array<int, 3>& v, const ShapeIndex& ctx);

/// The sites of `tied` (all at the same D from p) whose regions reach p.
/// Near p every D is linear, so the regions are cones cut out by the lines
/// v_i = 0 and v_i = +-v_j; one probe direction per open cone decides.
/// Exact ties on a shared hull go to the larger id. Ascending ids.
std::vector<int> closure_labels(const Point& p, const std::vector<int>& tied, const ShapeIndex& ctx);

/// Sites minimizing D over the candidates whose regions reach p (see
/// closure_labels). Ascending ids; empty if nothing is finite.
std::vector<int> nearest_sites(const Point& p, const std::vector<int>& candidates,
                               const ShapeIndex& ctx, Scalar* distance = nullptr);

}  // namespace linfvd
