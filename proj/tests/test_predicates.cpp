// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "linfvd/predicates.hpp"
#include "support.hpp"

using namespace linfvd;
using namespace linfvd::testing;

namespace {

// Segment (0,0)-(2,0) with the interior above, as the bottom of a 2x2 square.
OrthogonalShape square2() { return rectangle(2, 2); }

std::vector<int> all_ids(const OrthogonalShape& s) {
  std::vector<int> ids;
  for (const auto& site : s.sites) ids.push_back(site.id);
  return ids;
}

Scalar rnd(std::mt19937_64& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> d(lo * den, hi * den);
  return ratio(d(rng), den);
}

// L-infinity distance from p to a closed site, computed from first principles
// on a fine lattice of the site is not exact; instead use the box formula.
Scalar dist_to_site(const Point& p, const Site& s) { return linf_distance_to_box(p, s.bounds); }

}  // namespace

TEST(Halfspace, BottomEdgeOfUnitSquare) {
  auto sq = unit_square();
  const Site& bottom = sq.sites[0];
  EXPECT_TRUE(in_halfspace(Point{q("1/2"), q("3/10")}, bottom));
  EXPECT_FALSE(in_halfspace(Point{q("1/2"), q("-1/10")}, bottom));
  EXPECT_TRUE(in_halfspace(Point{q("1/2"), 0}, bottom));
}

TEST(Zone, IntervalExamples) {
  auto s = square2();
  const Site& seg = s.sites[0];
  EXPECT_TRUE(in_zone(Point{1, 1}, seg));
  EXPECT_FALSE(in_zone(Point{5, 1}, seg));
  EXPECT_TRUE(in_zone(Point{3, 1}, seg));
}

TEST(Zone, RestrictedDistance) {
  auto sq = unit_square();
  EXPECT_EQ(*restricted_distance(Point{q("1/2"), q("1/2")}, sq.sites[0]), q("1/2"));
  EXPECT_FALSE(restricted_distance(Point{q("1/2"), -1}, sq.sites[0]));
  EXPECT_FALSE(restricted_distance(Point{5, 1}, square2().sites[0]));
}

TEST(Zone, AgreesWithDirectDistanceOnRandomPairs) {
  auto shape = build_shape_2d({Point{0, 0}, Point{5, 0}, Point{5, 2}, Point{3, 2}, Point{3, 4},
                               Point{0, 4}},
                              {});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    Point p{rnd(rng, -2, 7, 8), rnd(rng, -2, 6, 8)};
    const Site& s = shape.sites[static_cast<std::size_t>(i) % shape.sites.size()];
    bool direct = dist_to_site(p, s) == distance_to_hull(p, s.hull);
    ASSERT_EQ(in_zone(p, s), direct) << p << " site " << s.id;
    auto d = restricted_distance(p, s);
    if (d) EXPECT_EQ(*d, distance_to_hull(p, s.hull));
  }
}

TEST(Zone, CellExamples) {
  auto s = square2();
  const Site& seg = s.sites[0];
  EXPECT_TRUE(zone_in_cell(seg, AxisBox(Point{q("5/2"), q("1/2")}, q("1/2"))));
  EXPECT_FALSE(zone_in_cell(seg, AxisBox(Point{5, q("1/2")}, q("1/2"))));
  EXPECT_TRUE(zone_in_cell(seg, AxisBox(Point{1, 0}, q("1/4"))));
}

TEST(Zone, CellTestMatchesBruteForceSampling) {
  auto shape = l_shape();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    AxisBox c(Point{rnd(rng, -1, 3, 4), rnd(rng, -1, 3, 4)}, ratio(1 + static_cast<long>(rng() % 4), 8));
    for (const auto& s : shape.sites) {
      // Sample the cell on a lattice fine enough to hit zone boundaries,
      // which pass through site endpoints at 45 degrees.
      bool found = false;
      for (int a = 0; a <= 16 && !found; ++a) {
        for (int b = 0; b <= 16 && !found; ++b) {
          Point p{c.lo(0) + c.radius * 2 * ratio(a, 16), c.lo(1) + c.radius * 2 * ratio(b, 16)};
          found = in_zone(p, s);
        }
      }
      if (found) EXPECT_TRUE(zone_in_cell(s, c));
      if (!zone_in_cell(s, c)) EXPECT_FALSE(found);
    }
  }
}

TEST(Intersect, StrictAndClosed) {
  auto sq = unit_square();
  const Site& bottom = sq.sites[0];
  AxisBox above(Point{q("1/2"), q("1/2")}, q("1/2"));
  EXPECT_TRUE(is_intersecting(bottom, above, false));
  EXPECT_FALSE(is_intersecting(bottom, above, true));
  AxisBox across(Point{q("1/2"), 0}, q("1/4"));
  EXPECT_TRUE(is_intersecting(bottom, across, true));
}

TEST(Intersect, FacetStrictAndClosed) {
  auto cube = box3(1, 1, 1);
  ShapeIndex on(cube, BvhMode::On);
  ShapeIndex off(cube, BvhMode::Off);
  const Site& bottom = cube.sites[4];  // z = 0
  AxisBox above(Point{q("1/2"), q("1/2"), q("1/2")}, q("1/2"));
  AxisBox across(Point{q("1/2"), q("1/2"), 0}, q("1/4"));
  for (const ShapeIndex* ctx : {&on, &off}) {
    EXPECT_TRUE(is_intersecting(bottom, above, false, ctx));
    EXPECT_FALSE(is_intersecting(bottom, above, true, ctx));
    EXPECT_TRUE(is_intersecting(bottom, across, true, ctx));
  }
}

TEST(Zone, MissingIndexIn3D) {
  auto cube = box3(1, 1, 1);
  try {
    in_zone(Point{0, 0, 0}, cube.sites[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingBvh);
  }
}

TEST(Bisector, Examples) {
  auto sq = square2();
  const Site& bottom = sq.sites[0];  // y = 0 up
  const Site& top = sq.sites[2];     // y = 2 down
  const Site& left = sq.sites[3];    // x = 0 right
  auto diag = affine_bisector(bottom, left);
  ASSERT_TRUE(diag);
  EXPECT_EQ(diag->kind, Bisector::Kind::Diagonal);
  EXPECT_TRUE(diag->contains(Point{q("1/3"), q("1/3")}));
  EXPECT_FALSE(diag->contains(Point{q("1/3"), q("-1/3")}));
  auto mid = affine_bisector(bottom, top);
  ASSERT_TRUE(mid);
  EXPECT_EQ(mid->kind, Bisector::Kind::AxisParallel);
  EXPECT_TRUE(mid->contains(Point{7, 1}));
  EXPECT_FALSE(affine_bisector(bottom, bottom));
}

TEST(Bisector, DiagonalPointsAreEquidistant) {
  auto sq = square2();
  const Site& bottom = sq.sites[0];
  const Site& left = sq.sites[3];
  auto b = *affine_bisector(bottom, left);
  for (const char* t : {"1/4", "1/2", "3/2"}) {
    Point p{q(t), q(t)};
    ASSERT_TRUE(b.contains(p));
    EXPECT_EQ(*restricted_distance(p, bottom), *restricted_distance(p, left));
  }
}

TEST(VertexTest, Examples) {
  auto sq = unit_square();
  std::vector<const Site*> all;
  for (const auto& s : sq.sites) all.push_back(&s);
  auto v = voronoi_vertex_test(sq.root_box(), all);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (Point{q("1/2"), q("1/2")}));

  auto r = rectangle(4, 2);
  std::vector<const Site*> three{&r.sites[0], &r.sites[2], &r.sites[3]};
  AxisBox c(Point{1, 1}, q("1/2"));
  auto w = voronoi_vertex_test(c, three);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Point{1, 1}));
  for (const Site* s : three) EXPECT_EQ(*restricted_distance(*w, *s), 1);

  AxisBox far(Point{3, 1}, q("1/2"));
  EXPECT_FALSE(voronoi_vertex_test(far, three));
}

TEST(VertexTest, UnitCube) {
  auto cube = box3(1, 1, 1);
  ShapeIndex ctx(cube, BvhMode::On);
  std::vector<const Site*> all;
  for (const auto& s : cube.sites) all.push_back(&s);
  auto v = voronoi_vertex_test(cube.root_box(), all, &ctx);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (Point{q("1/2"), q("1/2"), q("1/2")}));
}

TEST(Location, Examples) {
  auto sq = unit_square();
  ShapeIndex sctx(sq, BvhMode::Auto);
  EXPECT_TRUE(location_test(Point{q("1/2"), q("1/2")}, all_ids(sq), sctx));
  auto l = l_shape();
  ShapeIndex lctx(l, BvhMode::Auto);
  EXPECT_FALSE(location_test(Point{q("6/5"), q("6/5")}, all_ids(l), lctx));
  EXPECT_TRUE(location_test(Point{q("9/10"), q("9/10")}, all_ids(l), lctx));
}

TEST(Location, AgreesWithRayCasting2D) {
  std::vector<OrthogonalShape> shapes{unit_square(), l_shape(), square_with_hole(),
                                      build_shape_2d({Point{0, 0}, Point{6, 0}, Point{6, 3},
                                                      Point{4, 3}, Point{4, 1}, Point{2, 1},
                                                      Point{2, 4}, Point{0, 4}},
                                                     {rect_cycle(q("1/2"), 2, q("3/2"), 3)})};
  std::mt19937_64 rng(5);
  for (const auto& shape : shapes) {
    ShapeIndex ctx(shape, BvhMode::Auto);
    auto ids = all_ids(shape);
    for (int i = 0; i < 10000; ++i) {
      Point p{rnd(rng, -1, 7, 12), rnd(rng, -1, 5, 12)};
      ASSERT_EQ(location_test(p, ids, ctx), shape.contains(p)) << p;
    }
  }
}

TEST(Location, AgreesWithRayCasting3D) {
  auto notch = build_shape_3d(notched_cube_facets());
  ShapeIndex ctx(notch, BvhMode::On);
  auto ids = all_ids(notch);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 4000; ++i) {
    Point p{rnd(rng, -1, 3, 6), rnd(rng, -1, 3, 6), rnd(rng, -1, 3, 6)};
    ASSERT_EQ(location_test(p, ids, ctx), notch.contains(p)) << p;
  }
}

// U-shape with a notch in the top. Sites 2 and 6 are the two top edges,
// both on y = 3 facing down; site 6 has the larger id and wins exact ties.
OrthogonalShape notched_u() {
  return build_shape_2d({Point{0, 0}, Point{3, 0}, Point{3, 3}, Point{2, 3}, Point{2, 2},
                         Point{1, 2}, Point{1, 3}, Point{0, 3}},
                        {});
}

TEST(Closure, SameHullTieInsideBothZones) {
  auto u = notched_u();
  ShapeIndex ctx(u, BvhMode::Off);
  EXPECT_EQ(closure_labels(Point{q("3/2"), 2}, {2, 6}, ctx), (std::vector<int>{6}));
  // Z(2) ends at x = 1 here, but the point is inside Z(6).
  EXPECT_EQ(closure_labels(Point{1, 2}, {2, 6}, ctx), (std::vector<int>{6}));
}

TEST(Closure, RimOfTheWinnerKeepsBoth) {
  auto u = notched_u();
  ShapeIndex ctx(u, BvhMode::Off);
  // x = 1 + d is the right rim of Z(6); past it only site 2 reaches.
  EXPECT_EQ(closure_labels(Point{2, 2}, {2, 6}, ctx), (std::vector<int>{2, 6}));
  EXPECT_TRUE(zone_along(Point{2, 2}, u.sites[6], {-2, 1, 0}, ctx));
  EXPECT_FALSE(zone_along(Point{2, 2}, u.sites[6], {2, 1, 0}, ctx));
}

TEST(Closure, DistinctHullsAllReach) {
  auto sq = unit_square();
  ShapeIndex ctx(sq, BvhMode::Off);
  EXPECT_EQ(closure_labels(Point{q("1/2"), q("1/2")}, {0, 1, 2, 3}, ctx),
            (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(closure_labels(Point{1, 0}, {0, 1}, ctx), (std::vector<int>{0, 1}));
  // Off the diagonal the far site never wins.
  EXPECT_EQ(closure_labels(Point{q("1/2"), q("1/4")}, {0}, ctx), (std::vector<int>{0}));
}

TEST(Closure, CubeCornerAndCentre) {
  auto cube = box3(1, 1, 1);
  ShapeIndex ctx(cube, BvhMode::Off);
  const Point centre{q("1/2"), q("1/2"), q("1/2")};
  EXPECT_EQ(nearest_sites(centre, all_ids(cube), ctx).size(), 6u);
  // A point on an edge of the cube: only the two facets through it.
  Scalar d;
  auto near = nearest_sites(Point{q("1/2"), 0, 0}, all_ids(cube), ctx, &d);
  EXPECT_EQ(d, 0);
  EXPECT_EQ(near.size(), 2u);
}

TEST(Equidistant, LineSolutionForTwoSites) {
  auto r = rectangle(4, 2);
  auto sol = solve_equidistant({&r.sites[0], &r.sites[2]}, 2);
  EXPECT_TRUE(sol.consistent);
  EXPECT_EQ(sol.free_dims, 1);
  EXPECT_EQ(sol.point[1], 1);
  auto bad = solve_equidistant({&r.sites[0], &r.sites[2], &r.sites[1], &r.sites[3]}, 2);
  EXPECT_FALSE(bad.consistent);
}
