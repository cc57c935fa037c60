// SPDX-License-Identifier: Apache-2.0
#pragma once

// Small hand-built shapes shared by the test binaries.

#include <vector>

#include "linfvd/shape.hpp"

namespace linfvd::testing {

inline Scalar q(const char* s) { return parse_scalar(s); }

inline Cycle rect_cycle(Scalar x0, Scalar y0, Scalar x1, Scalar y1) {
  return {Point{x0, y0}, Point{x1, y0}, Point{x1, y1}, Point{x0, y1}};
}

inline OrthogonalShape rectangle(Scalar w, Scalar h) {
  return build_shape_2d(rect_cycle(0, 0, w, h), {});
}

inline OrthogonalShape unit_square() { return rectangle(1, 1); }

inline OrthogonalShape l_shape() {
  return build_shape_2d(
      {Point{0, 0}, Point{2, 0}, Point{2, 1}, Point{1, 1}, Point{1, 2}, Point{0, 2}}, {});
}

// Comb with teeth of alternating heights and two holes.
inline OrthogonalShape comb() {
  Cycle outer{Point{0, 0}, Point{9, 0}, Point{9, 5}, Point{8, 5}, Point{8, 2}, Point{7, 2},
              Point{7, 6}, Point{5, 6}, Point{5, 3}, Point{3, 3}, Point{3, 7}, Point{0, 7}};
  Cycle h1{Point{1, 1}, Point{1, 2}, Point{2, 2}, Point{2, 1}};
  Cycle h2{Point{1, 4}, Point{1, 6}, Point{2, 6}, Point{2, 4}};
  return build_shape_2d(outer, {h1, h2});
}

inline OrthogonalShape square_with_hole() {
  Cycle hole = rect_cycle(1, 1, 2, 2);
  return build_shape_2d(rect_cycle(0, 0, 3, 3), {hole});
}

/// Axis-aligned box [0,w]x[0,h]x[0,d] as six facets.
inline std::vector<FacetSpec> box_facets(Scalar w, Scalar h, Scalar d) {
  const Scalar ext[3] = {w, h, d};
  std::vector<FacetSpec> out;
  for (int axis = 0; axis < 3; ++axis) {
    auto [u, v] = plane_axes(3, axis);
    for (int side = 0; side < 2; ++side) {
      FacetSpec f;
      f.axis = axis;
      f.offset = side ? ext[axis] : Scalar(0);
      f.interior_sign = side ? -1 : 1;
      f.outer = rect_cycle(0, 0, ext[u], ext[v]);
      out.push_back(f);
    }
  }
  return out;
}

inline OrthogonalShape box3(Scalar w, Scalar h, Scalar d) {
  return build_shape_3d(box_facets(w, h, d));
}

/// Box [0,2]^3 with the octant [1,2]^3 removed (an L-shaped solid with one
/// reflex corner).
inline std::vector<FacetSpec> notched_cube_facets() {
  std::vector<FacetSpec> out;
  auto add = [&](int axis, Scalar off, int sign, Cycle c) {
    out.push_back(FacetSpec{axis, off, std::move(c), sign});
  };
  Cycle notched = {Point{0, 0}, Point{2, 0}, Point{2, 1},
                   Point{1, 1}, Point{1, 2}, Point{0, 2}};
  for (int axis = 0; axis < 3; ++axis) {
    add(axis, 0, 1, rect_cycle(0, 0, 2, 2));
    add(axis, 2, -1, notched);
    add(axis, 1, -1, rect_cycle(1, 1, 2, 2));
  }
  return out;
}

}  // namespace linfvd::testing
