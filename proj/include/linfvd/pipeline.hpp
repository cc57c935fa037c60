// SPDX-License-Identifier: Apache-2.0
#pragma once

// End-to-end run: scale, subdivide, reconstruct, optionally check.

#include <memory>
#include <optional>
#include <string>

#include "linfvd/verification.hpp"

namespace linfvd {

struct PipelineConfig {
  int max_depth = 32;
  BvhMode bvh = BvhMode::Auto;
  bool contract = false;
  int grid_check = 0;  // 0 disables the oracle comparison
};

struct PipelineResult {
  OrthogonalShape input;
  std::unique_ptr<OrthogonalShape> unit;  // stable address for the index
  std::unique_ptr<ShapeIndex> index;
  SubdivisionTree tree;
  VoronoiGraph graph;   // raw, unit frame
  VoronoiGraph output;  // input frame, contracted on request
  ReconstructionStats reconstruction;
  std::optional<GridCheck> grid;
  double seconds = 0;
};

/// Throws InvalidArgument for a max depth outside [1, 64].
PipelineResult run_pipeline(const OrthogonalShape& input, const PipelineConfig& config);

/// Deterministic JSON stats (no timings).
std::string stats_document(const PipelineResult& r, const PipelineConfig& config);

/// One-line human summary including wall time.
std::string summary_line(const PipelineResult& r);

}  // namespace linfvd
