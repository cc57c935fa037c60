// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "linfvd/verification.hpp"
#include "support.hpp"

using namespace linfvd;
using namespace linfvd::testing;

namespace {

struct Pipeline {
  OrthogonalShape shape;
  std::unique_ptr<ShapeIndex> ctx;
  SubdivisionTree tree;
  VoronoiGraph graph;

  explicit Pipeline(OrthogonalShape s) : shape(scale_to_unit(std::move(s))) {
    ctx = std::make_unique<ShapeIndex>(shape, BvhMode::Auto);
    tree = subdivide(*ctx);
    graph = build_graph(tree, *ctx);
  }
};

}  // namespace

TEST(Oracle, BruteNearestExamples) {
  auto sq = unit_square();
  Oracle o(sq);
  EXPECT_EQ(o.brute_nearest(Point{q("1/2"), q("1/2")}).size(), 4u);
  EXPECT_EQ(o.brute_nearest(Point{q("1/2"), q("1/4")}), std::vector<int>{0});
  EXPECT_TRUE(o.brute_nearest(Point{2, q("1/2")}).empty());
  Scalar d;
  o.brute_nearest(Point{q("1/4"), q("1/2")}, &d);
  EXPECT_EQ(d, q("1/4"));
}

TEST(Oracle, AgreesWithLabelSetOnFullCandidates) {
  for (auto s : {comb(), square_with_hole(), l_shape()}) {
    Oracle o(s);
    ShapeIndex ctx(s, BvhMode::On);
    std::vector<int> all;
    for (const auto& site : s.sites) all.push_back(site.id);
    auto box = s.root_box();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> u(0, 96);
    for (int i = 0; i < 400; ++i) {
      Point p{box.lo(0) + box.radius * 2 * ratio(u(rng), 96), box.lo(1) + box.radius * 2 * ratio(u(rng), 96)};
      EXPECT_EQ(o.brute_nearest(p), label_set(p, all, all, ctx)) << p;
    }
  }
}

TEST(Oracle, SampleGrid) {
  auto sq = unit_square();
  Oracle o(sq);
  auto g = sample_grid(o, 2);
  ASSERT_EQ(g.points.size(), 9u);
  EXPECT_EQ(g.points[4], (Point{q("1/2"), q("1/2")}));
  EXPECT_EQ(g.labels[4].size(), 4u);
  EXPECT_THROW(sample_grid(o, 1), Error);
}

TEST(Oracle, ExteriorSamplesAreEmpty) {
  auto s = square_with_hole();
  Oracle o(s);
  auto g = sample_grid(o, 6);
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    if (s.locate(g.points[i]) == Containment::Outside) EXPECT_TRUE(g.labels[i].empty());
    else EXPECT_FALSE(g.labels[i].empty());
  }
}

TEST(NaiveScan, Basics) {
  auto d = decompose(comb().polygon);
  EXPECT_EQ(naive_box_scan(d, Aabb{2, {0, 0}, {9, 7}}).size(), d.rectangles.size());
  RectDecomposition empty;
  EXPECT_TRUE(naive_box_scan(empty, Aabb{2, {0, 0}, {1, 1}}).empty());
}

TEST(OnSegment, Exact) {
  EXPECT_TRUE(on_segment(Point{1, 1}, Point{0, 0}, Point{2, 2}));
  EXPECT_FALSE(on_segment(Point{1, q("1001/1000")}, Point{0, 0}, Point{2, 2}));
  EXPECT_FALSE(on_segment(Point{3, 3}, Point{0, 0}, Point{2, 2}));
  EXPECT_TRUE(on_segment(Point{1, 1, 1}, Point{0, 0, 0}, Point{2, 2, 2}));
  EXPECT_FALSE(on_segment(Point{1, 1, 0}, Point{0, 0, 0}, Point{2, 2, 2}));
}

TEST(Certify, PipelineGraphsPass) {
  for (auto s : {unit_square(), rectangle(4, 2), comb(), square_with_hole(), l_shape()}) {
    Pipeline p(s);
    Oracle o(p.shape);
    auto c = certify(p.graph, o);
    EXPECT_TRUE(c.ok()) << (c.violations.empty() ? "" : c.violations.front());
    EXPECT_EQ(c.nodes_checked, p.graph.nodes.size());
    auto cc = certify(contract(p.graph), o);
    EXPECT_TRUE(cc.ok()) << (cc.violations.empty() ? "" : cc.violations.front());
  }
  Pipeline p3(build_shape_3d(notched_cube_facets()));
  auto c3 = certify(p3.graph, Oracle(p3.shape));
  EXPECT_TRUE(c3.ok()) << (c3.violations.empty() ? "" : c3.violations.front());
}

TEST(Certify, DetectsWrongNode) {
  auto sq = unit_square();
  Oracle o(sq);
  VoronoiGraph g;
  g.nodes.push_back(VorNode{0, NodeKind::Bisector, Point{q("1/2"), q("1/4")}, {0, 2}, 0});
  g.nodes.push_back(VorNode{1, NodeKind::Bisector, Point{q("1/4"), q("1/4")}, {0, 3}, 0});
  g.nodes.push_back(VorNode{2, NodeKind::Bisector, Point{q("1/4"), q("1/2")}, {0, 2}, 0});
  auto c = certify(g, o);
  // Node 0 is not equidistant; node 2 is closer to the left edge.
  EXPECT_EQ(c.violations.size(), 2u);
  g.nodes.push_back(VorNode{3, NodeKind::Bisector, Point{q("3/4"), q("3/4")}, {1, 2}, 0});
  EXPECT_EQ(certify(g, o).violations.size(), 2u);
  g.edges = {{1, 3}};  // shares no label
  EXPECT_EQ(certify(g, o).violations.size(), 3u);
}

TEST(GridCheck, PipelineGraphsAgree) {
  for (auto s : {unit_square(), rectangle(4, 2), comb(), square_with_hole(), l_shape()}) {
    Pipeline p(s);
    auto r = grid_check(p.graph, Oracle(p.shape), 32);
    EXPECT_TRUE(r.ok()) << r.violations.size() << " " << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_GT(r.multi_label, 0u);
  }
}

TEST(GridCheck, MissingEdgeIsReported) {
  Pipeline p(unit_square());
  VoronoiGraph g = p.graph;
  g.edges.clear();
  auto r = grid_check(g, Oracle(p.shape), 8);
  EXPECT_FALSE(r.ok());
}

TEST(Soundness, LeafActiveSetsCoverOracleLabels) {
  for (auto s : {rectangle(4, 2), square_with_hole(), l_shape()}) {
    Pipeline p(s);
    Oracle o(p.shape);
    for (int leaf : p.tree.leaves()) {
      const Cell& c = p.tree.cell(leaf);
      auto inc = region_incidence(c.box, o, 9);
      EXPECT_TRUE(std::includes(c.active.begin(), c.active.end(), inc.begin(), inc.end()))
          << "leaf " << leaf;
    }
  }
}
