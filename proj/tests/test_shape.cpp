// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"

using namespace linfvd;
using namespace linfvd::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Io;
}

}  // namespace

TEST(Shape2D, UnitSquareHasFourSites) {
  auto s = unit_square();
  EXPECT_EQ(s.sites.size(), 4u);
  EXPECT_EQ(s.hole_count(), 0);
  EXPECT_TRUE(reflex_vertices(s).empty());
  // Bottom edge: hull y = 0, interior above.
  EXPECT_EQ(s.sites[0].hull, (AffineHull{1, 0}));
  EXPECT_EQ(s.sites[0].sigma, 1);
  // Right edge: hull x = 1, interior to the left.
  EXPECT_EQ(s.sites[1].hull, (AffineHull{0, 1}));
  EXPECT_EQ(s.sites[1].sigma, -1);
}

TEST(Shape2D, LShapeHasOneReflexVertex) {
  auto s = l_shape();
  EXPECT_EQ(s.sites.size(), 6u);
  auto r = reflex_vertices(s);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], (Point{1, 1}));
}

TEST(Shape2D, SquareWithHoleHasFourReflexVertices) {
  auto s = square_with_hole();
  EXPECT_EQ(s.sites.size(), 8u);
  EXPECT_EQ(s.hole_count(), 1);
  EXPECT_EQ(reflex_vertices(s).size(), 4u);
  EXPECT_FALSE(s.contains(Point{q("3/2"), q("3/2")}));
  EXPECT_TRUE(s.contains(Point{1, q("3/2")}));
  EXPECT_TRUE(s.contains(Point{q("1/2"), q("1/2")}));
}

TEST(Shape2D, ClockwiseOuterIsNormalized) {
  auto s = build_shape_2d({Point{0, 0}, Point{0, 1}, Point{1, 1}, Point{1, 0}}, {});
  EXPECT_GT(signed_area2(s.polygon[0]), 0);
  for (const auto& site : s.sites) {
    // Midpoint nudged along sigma lands inside.
    Point m = midpoint(site.a, site.b);
    m[site.hull.axis] += ratio(site.sigma, 10);
    EXPECT_EQ(s.locate(m), Containment::Inside);
  }
}

TEST(Shape2D, ValidationErrors) {
  EXPECT_EQ(code_of([] {
              build_shape_2d({Point{0, 0}, Point{2, 1}, Point{2, 2}, Point{0, 2}}, {});
            }),
            ErrorCode::NotAxisAligned);
  EXPECT_EQ(code_of([] { build_shape_2d({Point{0, 0}, Point{1, 0}, Point{1, 1}}, {}); }),
            ErrorCode::NotClosed);
  EXPECT_EQ(code_of([] {
              build_shape_2d(rect_cycle(0, 0, 4, 4), {rect_cycle(5, 5, 6, 6)});
            }),
            ErrorCode::HoleOutsideOuter);
  // Two squares touching at a single vertex.
  EXPECT_EQ(code_of([] {
              build_shape_2d({Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{2, 1}, Point{2, 2},
                              Point{1, 2}, Point{1, 1}, Point{0, 1}},
                             {});
            }),
            ErrorCode::NonManifoldVertex);
  // Hole touching the outer boundary along an edge.
  EXPECT_EQ(code_of([] {
              build_shape_2d(rect_cycle(0, 0, 4, 4), {rect_cycle(0, 1, 1, 2)});
            }),
            ErrorCode::SelfIntersecting);
  EXPECT_EQ(code_of([] {
              build_shape_2d(rect_cycle(0, 0, 4, 4), {rect_cycle(1, 1, 3, 3),
                                                      rect_cycle(2, 2, 5, 3)});
            }),
            ErrorCode::SelfIntersecting);
  EXPECT_EQ(code_of([] {
              build_shape_2d({Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{2, 1}, Point{0, 1}},
                             {});
            }),
            ErrorCode::MalformedDocument);
}

TEST(Shape2D, ScaleRectangleToUnit) {
  auto s = scale_to_unit(rectangle(4, 2));
  EXPECT_EQ(s.bounds.lo[0], 0);
  EXPECT_EQ(s.bounds.hi[0], 1);
  EXPECT_EQ(s.bounds.lo[1], q("1/4"));
  EXPECT_EQ(s.bounds.hi[1], q("3/4"));
  EXPECT_EQ(s.scale.to_input(Point{q("1/4"), q("1/2")}), (Point{1, 1}));
  EXPECT_EQ(s.root_box().radius, q("1/2"));
}

TEST(Shape2D, ScaleUnitSquareIsIdentity) {
  auto s = scale_to_unit(unit_square());
  EXPECT_EQ(s.scale.factor, 1);
  EXPECT_EQ(s.scale.offset, (Point{0, 0}));
  EXPECT_EQ(s.polygon, unit_square().polygon);
}

TEST(Shape2D, DegenerateScaleThrows) {
  OrthogonalShape empty;
  empty.dim = 2;
  empty.bounds = Aabb::of_point(Point{1, 1});
  EXPECT_EQ(code_of([&] { scale_to_unit(empty); }), ErrorCode::Degenerate);
}

TEST(Shape2D, SiteCornerClassification) {
  auto sq = unit_square();
  auto c = site_corner(sq, 0, 1);
  EXPECT_EQ(c.first, (Point{1, 0}));
  EXPECT_FALSE(c.reflex);
  auto l = l_shape();
  auto r = site_corner(l, 2, 3);
  EXPECT_EQ(r.first, (Point{1, 1}));
  EXPECT_TRUE(r.reflex);
  EXPECT_EQ(code_of([&] { site_corner(sq, 0, 2); }), ErrorCode::NotAdjacent);
}

TEST(Shape2D, ReflexCountFormula) {
  auto s = square_with_hole();
  auto n = static_cast<long>(s.vertex_count());
  EXPECT_EQ(static_cast<long>(reflex_vertices(s).size()), n / 2 + 2 * (s.hole_count() - 1));
}

TEST(Shape3D, CubeAndBox) {
  auto c = box3(1, 1, 1);
  EXPECT_EQ(c.sites.size(), 6u);
  EXPECT_EQ(c.corners.size(), 8u);
  EXPECT_TRUE(c.contains(Point{q("1/2"), q("1/2"), q("1/2")}));
  EXPECT_TRUE(c.contains(Point{1, 1, 1}));
  EXPECT_FALSE(c.contains(Point{q("3/2"), q("1/2"), q("1/2")}));
  EXPECT_EQ(code_of([&] { reflex_vertices(c); }), ErrorCode::DimensionMismatch);
  auto big = scale_to_unit(box3(2, 2, 2));
  EXPECT_EQ(big.bounds, box3(1, 1, 1).bounds);
}

TEST(Shape3D, NotchedCube) {
  auto s = build_shape_3d(notched_cube_facets());
  EXPECT_EQ(s.sites.size(), 9u);
  EXPECT_FALSE(s.contains(Point{q("3/2"), q("3/2"), q("3/2")}));
  EXPECT_TRUE(s.contains(Point{q("1/2"), q("3/2"), q("3/2")}));
  auto c = site_corner(s, 2, 5);  // x=1 wall and y=1 wall of the notch
  EXPECT_TRUE(c.reflex);
}

TEST(Shape3D, ValidationErrors) {
  auto open = box_facets(1, 1, 1);
  open.pop_back();
  open.push_back(open.front());
  EXPECT_NE(code_of([&] { build_shape_3d(open); }), ErrorCode::Io);
  auto flipped = box_facets(1, 1, 1);
  flipped[0].interior_sign = -1;
  EXPECT_EQ(code_of([&] { build_shape_3d(flipped); }), ErrorCode::MalformedDocument);
  auto missing = box_facets(1, 1, 1);
  missing.pop_back();
  EXPECT_EQ(code_of([&] { build_shape_3d(missing); }), ErrorCode::NotClosed);
  auto skew = box_facets(1, 1, 1);
  skew[5].outer = {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{q("1/2"), 2}};
  EXPECT_EQ(code_of([&] { build_shape_3d(skew); }), ErrorCode::NotAxisAligned);
}
