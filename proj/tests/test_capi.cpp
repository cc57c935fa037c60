// SPDX-License-Identifier: Apache-2.0
// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "linfvd/linfvd.h"

namespace {

const char* kSquare = R"({"dimension":2,"outer":[[0,0],[1,0],[1,1],[0,1]]})";

std::string take(char* s) {
  std::string out = s ? s : "";
  linfvd_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, UnitSquare) {
  linfvd_shape* shape = nullptr;
  ASSERT_EQ(linfvd_shape_from_json(kSquare, 2, &shape), LINFVD_OK);
  EXPECT_EQ(linfvd_shape_dimension(shape), 2);
  EXPECT_EQ(linfvd_shape_site_count(shape), 4u);
  EXPECT_EQ(linfvd_shape_reflex_count(shape), 0u);

  linfvd_result* result = nullptr;
  ASSERT_EQ(linfvd_compute(shape, nullptr, &result), LINFVD_OK);
  EXPECT_EQ(linfvd_result_node_count(result), 5u);
  EXPECT_EQ(linfvd_result_edge_count(result), 4u);
  EXPECT_EQ(linfvd_result_cell_count(result), 1u);

  char* text = nullptr;
  ASSERT_EQ(linfvd_result_graph_json(result, &text), LINFVD_OK);
  EXPECT_NE(take(text).find("\"1/2\""), std::string::npos);
  ASSERT_EQ(linfvd_result_svg(result, &text), LINFVD_OK);
  EXPECT_NE(take(text).find("<svg"), std::string::npos);
  ASSERT_EQ(linfvd_result_summary(result, &text), LINFVD_OK);
  EXPECT_EQ(take(text).rfind("4 sites and 1 cells are generated", 0), 0u);
  linfvd_result_free(result);
  linfvd_shape_free(shape);
}

TEST(CApi, ValidationStatus) {
  linfvd_shape* shape = nullptr;
  const linfvd_status st =
      linfvd_shape_from_json(R"({"dimension":2,"outer":[[0,0],[2,0],[2,2],[1,3]]})", 0, &shape);
  EXPECT_EQ(st, LINFVD_NOT_AXIS_ALIGNED);
  EXPECT_TRUE(linfvd_status_is_validation(st));
  EXPECT_EQ(shape, nullptr);
  EXPECT_NE(std::string(linfvd_last_error()).find("NotAxisAligned"), std::string::npos);

  EXPECT_EQ(linfvd_shape_from_json("{", 0, &shape), LINFVD_MALFORMED_DOCUMENT);
  EXPECT_EQ(linfvd_shape_from_json(kSquare, 3, &shape), LINFVD_DIMENSION_MISMATCH);
  EXPECT_EQ(linfvd_shape_from_file("/nonexistent.json", 0, &shape), LINFVD_IO);
  EXPECT_FALSE(linfvd_status_is_validation(LINFVD_IO));
  EXPECT_FALSE(linfvd_status_is_validation(LINFVD_INTERNAL));
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(linfvd_shape_from_json(nullptr, 0, nullptr), LINFVD_INVALID_ARGUMENT);
  EXPECT_EQ(linfvd_compute(nullptr, nullptr, nullptr), LINFVD_INVALID_ARGUMENT);
  EXPECT_EQ(linfvd_shape_site_count(nullptr), 0u);
  linfvd_shape_free(nullptr);
  linfvd_result_free(nullptr);
  linfvd_string_free(nullptr);
}

TEST(CApi, OptionsAreChecked) {
  linfvd_shape* shape = nullptr;
  ASSERT_EQ(linfvd_shape_from_json(kSquare, 0, &shape), LINFVD_OK);
  linfvd_options opt;
  linfvd_options_init(&opt);
  EXPECT_EQ(opt.max_depth, 32);
  linfvd_result* r = nullptr;
  opt.max_depth = 0;
  EXPECT_EQ(linfvd_compute(shape, &opt, &r), LINFVD_INVALID_ARGUMENT);
  opt.max_depth = 8;
  opt.grid_check = 1;
  EXPECT_EQ(linfvd_compute(shape, &opt, &r), LINFVD_INVALID_ARGUMENT);
  opt.bvh = static_cast<linfvd_bvh_mode>(9);
  opt.grid_check = 0;
  EXPECT_EQ(linfvd_compute(shape, &opt, &r), LINFVD_INVALID_ARGUMENT);
  EXPECT_EQ(r, nullptr);
  linfvd_shape_free(shape);
}

TEST(CApi, GenerateAndGridCheck) {
  linfvd_shape* shape = nullptr;
  ASSERT_EQ(linfvd_generate(5, 2, 40, 1, 3, &shape), LINFVD_OK);
  EXPECT_EQ(linfvd_shape_hole_count(shape), 1);
  linfvd_options opt;
  linfvd_options_init(&opt);
  opt.grid_check = 24;
  opt.contract = 1;
  linfvd_result* r = nullptr;
  ASSERT_EQ(linfvd_compute(shape, &opt, &r), LINFVD_OK);
  EXPECT_EQ(linfvd_result_grid_violations(r), 0u);
  char* stats = nullptr;
  ASSERT_EQ(linfvd_result_stats_json(r, &stats), LINFVD_OK);
  const std::string s = take(stats);
  EXPECT_NE(s.find("\"grid_check\""), std::string::npos);
  EXPECT_NE(s.find("\"contracted\": true"), std::string::npos);
  linfvd_result_free(r);
  linfvd_shape_free(shape);

  EXPECT_EQ(linfvd_generate(1, 2, 8, 3, 3, &shape), LINFVD_INFEASIBLE_SPEC);
  EXPECT_EQ(linfvd_generate(1, 5, 8, 0, 3, &shape), LINFVD_INFEASIBLE_SPEC);
}

TEST(CApi, ShapeJsonRoundTrip) {
  linfvd_shape* shape = nullptr;
  ASSERT_EQ(linfvd_generate(2, 3, 20, 0, 3, &shape), LINFVD_OK);
  char* doc = nullptr;
  ASSERT_EQ(linfvd_shape_to_json(shape, &doc), LINFVD_OK);
  const std::string text = take(doc);
  linfvd_shape* back = nullptr;
  ASSERT_EQ(linfvd_shape_from_json(text.c_str(), 3, &back), LINFVD_OK);
  EXPECT_EQ(linfvd_shape_site_count(back), linfvd_shape_site_count(shape));
  ASSERT_EQ(linfvd_shape_to_json(back, &doc), LINFVD_OK);
  EXPECT_EQ(take(doc), text);

  linfvd_result* r = nullptr;
  ASSERT_EQ(linfvd_compute(back, nullptr, &r), LINFVD_OK);
  char* out = nullptr;
  EXPECT_EQ(linfvd_result_svg(r, &out), LINFVD_DIMENSION_MISMATCH);
  ASSERT_EQ(linfvd_result_obj(r, &out), LINFVD_OK);
  EXPECT_EQ(take(out).rfind("# linfvd render", 0), 0u);
  linfvd_result_free(r);
  linfvd_shape_free(back);
  linfvd_shape_free(shape);
}

TEST(CApi, StatusNames) {
  EXPECT_STREQ(linfvd_status_name(LINFVD_OK), "ok");
  EXPECT_STREQ(linfvd_status_name(LINFVD_NON_MANIFOLD_VERTEX), "NonManifoldVertex");
  EXPECT_STRNE(linfvd_version(), "");
}
