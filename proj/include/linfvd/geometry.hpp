// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact rational geometry kernel: scalars, points, axis-aligned boxes and
// affine hulls of axis-perpendicular sites. Nothing in here rounds.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "linfvd/errors.hpp"

namespace linfvd {

using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (canonicalized). Throws MalformedDocument.
Scalar parse_scalar(std::string_view text);

/// Canonical "p" or "p/q" string. parse_scalar(to_string(x)) == x.
std::string to_string(const Scalar& x);

/// Canonical n/d; mpq_class(n, d) alone is not reduced.
Scalar ratio(long num, long den);

int sign(const Scalar& x);
Scalar abs(const Scalar& x);
const Scalar& min(const Scalar& a, const Scalar& b);
const Scalar& max(const Scalar& a, const Scalar& b);

class Point {
 public:
  Point() = default;
  explicit Point(int dim);
  Point(std::initializer_list<Scalar> coords);

  int dim() const noexcept { return dim_; }
  const Scalar& operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  Scalar& operator[](int i) { return x_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Point& a, const Point& b);
  /// Lexicographic; used for point-keyed maps.
  friend bool operator<(const Point& a, const Point& b);

 private:
  int dim_ = 0;
  std::array<Scalar, 3> x_{};
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Midpoint of two points of equal dimension.
Point midpoint(const Point& a, const Point& b);

/// {x : x[axis] == offset}
struct AffineHull {
  int axis = 0;
  Scalar offset;

  friend bool operator==(const AffineHull& a, const AffineHull& b) {
    return a.axis == b.axis && a.offset == b.offset;
  }
};

/// General closed axis-aligned box with per-axis bounds (lo <= hi).
struct Aabb {
  int dim = 0;
  std::array<Scalar, 3> lo{};
  std::array<Scalar, 3> hi{};

  static Aabb of_point(const Point& p);
  void expand(const Point& p);
  void expand(const Aabb& b);
  Point min_corner() const;
  Point max_corner() const;
  bool contains(const Point& p) const;
  /// Product of extents over all axes.
  Scalar volume() const;

  friend bool operator==(const Aabb& a, const Aabb& b);
};

/// Square/cube given by center and L-infinity radius (half edge length).
struct AxisBox {
  Point center;
  Scalar radius;

  AxisBox() = default;
  AxisBox(Point c, Scalar r);

  int dim() const { return center.dim(); }
  Scalar lo(int axis) const { return center[axis] - radius; }
  Scalar hi(int axis) const { return center[axis] + radius; }
  Aabb to_aabb() const;
  static AxisBox from_aabb(const Aabb& b);  // requires equal extents
  bool contains(const Point& p) const;
  /// Corner with index bits selecting lo (0) / hi (1) per axis.
  Point corner(unsigned bits) const;
  /// Child cell of a quadtree/octree split, same bit convention as corner().
  AxisBox child(unsigned bits) const;
};

void require_same_dim(const Point& a, const Point& b);

Scalar linf_distance(const Point& p, const Point& q);
/// 0 inside the closed box, otherwise distance to the nearest box point.
Scalar linf_distance_to_box(const Point& p, const AxisBox& b);
Scalar linf_distance_to_box(const Point& p, const Aabb& b);
Scalar distance_to_hull(const Point& p, const AffineHull& h);
Point project_to_hull(const Point& p, const AffineHull& h);

/// strict=false: closed boxes share a point. strict=true: open boxes share a point.
bool boxes_overlap(const AxisBox& a, const AxisBox& b, bool strict);
bool boxes_overlap(const Aabb& a, const Aabb& b, bool strict);

/// The two in-plane axes of a hyperplane perpendicular to `axis` in 3D,
/// ascending; in 2D only .first is meaningful.
std::pair<int, int> plane_axes(int dim, int axis);

}  // namespace linfvd
