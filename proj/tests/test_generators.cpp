// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "linfvd/generators.hpp"
#include "linfvd/polygon.hpp"

using namespace linfvd;

namespace {

bool same_shape(const OrthogonalShape& a, const OrthogonalShape& b) {
  if (a.dim != b.dim || a.sites.size() != b.sites.size()) return false;
  for (std::size_t i = 0; i < a.sites.size(); ++i) {
    if (!(a.sites[i].bounds == b.sites[i].bounds)) return false;
  }
  return true;
}

}  // namespace

TEST(Generate2D, SiteCountsNearTarget) {
  for (int target : {8, 30, 64, 120, 200}) {
    for (int holes : {0, 1, 3}) {
      if (target < 4 * holes + 4) continue;
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto s = generate(GenSpec{seed, 2, target, holes, 3});
        const double n = static_cast<double>(s.sites.size());
        EXPECT_GE(n, 0.8 * target) << target << " " << holes << " " << seed;
        EXPECT_LE(n, 1.2 * target) << target << " " << holes << " " << seed;
        EXPECT_EQ(s.hole_count(), holes);
      }
    }
  }
}

TEST(Generate2D, Deterministic) {
  GenSpec spec{42, 2, 60, 2, 4};
  auto a = generate(spec);
  auto b = generate(spec);
  EXPECT_TRUE(same_shape(a, b));
  EXPECT_EQ(a.polygon, b.polygon);
  spec.seed = 43;
  EXPECT_FALSE(generate(spec).polygon == a.polygon);
}

TEST(Generate2D, TwoHolesGiveGenusTwo) {
  auto s = generate(GenSpec{7, 2, 40, 2, 3});
  EXPECT_EQ(s.polygon.size(), 3u);
  EXPECT_EQ(s.hole_count(), 2);
}

TEST(Generate2D, ReflexCountFormula) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto s = generate(GenSpec{seed, 2, 20 + static_cast<int>(seed) * 7, static_cast<int>(seed % 4), 3});
    const auto n = static_cast<long>(s.vertex_count());
    const long h = s.hole_count();
    EXPECT_EQ(static_cast<long>(reflex_vertices(s).size()), n / 2 + 2 * (h - 1));
  }
}

TEST(Generate2D, InfeasibleSpecs) {
  EXPECT_THROW(generate(GenSpec{1, 2, 6, 2, 3}), Error);
  EXPECT_THROW(generate(GenSpec{1, 2, 30, 0, 1}), Error);
  EXPECT_THROW(generate(GenSpec{1, 4, 30, 0, 3}), Error);
}

TEST(Generate3D, ValidAndNearTarget) {
  for (int target : {6, 20, 40}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto s = generate(GenSpec{seed, 3, target, 0, 2});
      EXPECT_EQ(s.dim, 3);
      const double n = static_cast<double>(s.sites.size());
      EXPECT_GE(n, 0.8 * target);
      EXPECT_LE(n, 1.2 * target);
    }
  }
  auto a = generate(GenSpec{5, 3, 30, 0, 2});
  auto b = generate(GenSpec{5, 3, 30, 0, 2});
  EXPECT_TRUE(same_shape(a, b));
}

TEST(Generate3D, RejectsHolesAndTinyTargets) {
  EXPECT_THROW(generate(GenSpec{1, 3, 4, 0, 2}), Error);
  EXPECT_THROW(generate(GenSpec{1, 3, 20, 1, 2}), Error);
}

TEST(VoxelFacets, SingleVoxelIsACube) {
  std::vector<std::vector<std::vector<bool>>> v(1, std::vector<std::vector<bool>>(1, std::vector<bool>(1, true)));
  std::vector<FacetSpec> f;
  ASSERT_TRUE(voxel_facets(v, f));
  EXPECT_EQ(f.size(), 6u);
  auto s = build_shape_3d(f);
  EXPECT_EQ(s.corners.size(), 8u);
}

TEST(VoxelFacets, RingHasFacetHoleAndIsRejected) {
  // 3x3x1 ring: top and bottom facets have a hole.
  std::vector<std::vector<std::vector<bool>>> v(3, std::vector<std::vector<bool>>(3, std::vector<bool>(1, true)));
  v[1][1][0] = false;
  std::vector<FacetSpec> f;
  EXPECT_FALSE(voxel_facets(v, f));
}

TEST(VoxelFacets, MergesCoplanarSquares) {
  // 2x1x1 bar: still six facets.
  std::vector<std::vector<std::vector<bool>>> v(2, std::vector<std::vector<bool>>(1, std::vector<bool>(1, true)));
  std::vector<FacetSpec> f;
  ASSERT_TRUE(voxel_facets(v, f));
  EXPECT_EQ(f.size(), 6u);
}
