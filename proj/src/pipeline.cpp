// SPDX-License-Identifier: Apache-2.0
#include "linfvd/pipeline.hpp"

#include <chrono>
#include <cstdio>

#include "json.hpp"
#include "linfvd/io.hpp"

namespace linfvd {

PipelineResult run_pipeline(const OrthogonalShape& input, const PipelineConfig& config) {
  if (config.max_depth < 1 || config.max_depth > 64) {
    throw Error(ErrorCode::InvalidArgument, "max depth must lie in [1, 64]");
  }
  const auto start = std::chrono::steady_clock::now();
  PipelineResult r;
  r.input = input;
  r.unit = std::make_unique<OrthogonalShape>(scale_to_unit(input));
  r.index = std::make_unique<ShapeIndex>(*r.unit, config.bvh);
  SubdivisionLimits limits;
  limits.max_depth = config.max_depth;
  r.tree = subdivide(*r.index, limits);
  r.graph = build_graph(r.tree, *r.index, &r.reconstruction);
  r.output = to_input_frame(config.contract ? contract(r.graph) : r.graph, r.unit->scale);
  if (config.grid_check > 0) r.grid = grid_check(r.graph, Oracle(*r.unit), config.grid_check);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string stats_document(const PipelineResult& r, const PipelineConfig& config) {
  nlohmann::ordered_json j;
  const auto& st = r.tree.stats;
  j["dimension"] = r.unit->dim;
  j["sites"] = r.unit->sites.size();
  j["cells"] = st.cells;
  nlohmann::ordered_json leaves = nlohmann::ordered_json::object();
  for (const auto& [v, n] : st.leaves) leaves[verdict_name(v, r.unit->dim)] = n;
  j["leaves"] = leaves;
  j["max_depth"] = st.max_depth;
  j["min_leaf_edge"] = to_string(st.min_leaf_edge);
  j["active_per_level"] = st.active_per_level;
  j["depth_limit_hits"] = st.depth_limit_hits;
  j["bvh"] = bvh_mode_name(config.bvh);
  std::size_t vertices = 0;
  for (const auto& n : r.output.nodes) vertices += n.kind == NodeKind::Vertex;
  j["graph"] = {{"contracted", config.contract},
                {"nodes", r.output.nodes.size()},
                {"edges", r.output.edges.size()},
                {"vertex_nodes", vertices}};
  const auto& rc = r.reconstruction;
  j["reconstruction"] = {{"leaves_processed", rc.leaves_processed},
                         {"vertex_leaves", rc.vertex_leaves},
                         {"rim_vertices", rc.rim_vertices},
                         {"neighbor_pairs", rc.neighbor_pairs},
                         {"one_sided_clips", rc.one_sided_clips},
                         {"nodes_on_leaf_corners", rc.nodes_on_leaf_corners}};
  if (r.grid) {
    j["grid_check"] = {{"k", config.grid_check},
                       {"samples", r.grid->samples},
                       {"multi_label", r.grid->multi_label},
                       {"violations", r.grid->violations.size()}};
  }
  return j.dump(2) + "\n";
}

std::string summary_line(const PipelineResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu sites and %zu cells are generated (%.1f ms)",
                r.unit->sites.size(), r.tree.stats.cells, r.seconds * 1000.0);
  return buf;
}

}  // namespace linfvd
