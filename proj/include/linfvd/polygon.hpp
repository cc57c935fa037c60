// SPDX-License-Identifier: Apache-2.0
#pragma once

// Planar rectilinear polygon utilities. A polygon is a list of vertex
// cycles: cycle 0 is the outer boundary (counter-clockwise), the rest are
// holes (clockwise), so the interior is always on the left.

#include <vector>

#include "linfvd/geometry.hpp"

namespace linfvd {

using Cycle = std::vector<Point>;
using Polygon = std::vector<Cycle>;

/// Twice the signed area (positive for counter-clockwise).
Scalar signed_area2(const Cycle& c);

/// Exact area of the region bounded by an outer cycle and its holes.
Scalar polygon_area(const Polygon& poly);

/// True where the interior angle is 270 degrees (interior on the left).
std::vector<bool> reflex_flags(const Cycle& c);

enum class Containment { Outside, Boundary, Inside };

/// Exact classification of a point against a closed polygon with holes.
Containment locate_in_polygon(const Polygon& poly, const Point& p);

inline bool polygon_contains_closed(const Polygon& poly, const Point& p) {
  return locate_in_polygon(poly, p) != Containment::Outside;
}

/// True if the point lies on the closed segment a-b (axis-parallel).
bool on_axis_segment(const Point& a, const Point& b, const Point& p);

Aabb polygon_bounds(const Polygon& poly);

}  // namespace linfvd
