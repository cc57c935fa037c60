// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force oracles: exhaustive nearest-site evaluation, grid sampling,
// naive rectangle scans and graph certification.

#include <string>
#include <vector>

#include "linfvd/reconstruction.hpp"

namespace linfvd {

/// Exhaustive evaluator over all sites. Uses its own index with every
/// hierarchy disabled, so it shares no query structure with the pipeline.
class Oracle {
 public:
  explicit Oracle(const OrthogonalShape& shape);

  /// Empty outside the closed shape (ray test), else the sites minimizing
  /// the restricted distance, same-hull ties settled as in nearest_sites.
  std::vector<int> brute_nearest(const Point& p, Scalar* distance = nullptr) const;

  const ShapeIndex& index() const { return ctx_; }

 private:
  const OrthogonalShape* shape_;
  ShapeIndex ctx_;
};

struct GridSample {
  int k = 0;
  AxisBox box;
  std::vector<Point> points;               // lexicographic, x fastest
  std::vector<std::vector<int>> labels;    // brute_nearest per point
};

/// (k+1)^d lattice over the root box.
GridSample sample_grid(const Oracle& oracle, int k);

/// Indices of the decomposition rectangles meeting the closed (or open) box.
std::vector<int> naive_box_scan(const RectDecomposition& dec, const Aabb& q, bool strict = false);

/// Exact point-on-closed-segment test.
bool on_segment(const Point& p, const Point& a, const Point& b);

struct Certificate {
  std::size_t nodes_checked = 0;
  std::size_t edges_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Every node is equidistant to its labels with no strictly closer site and
/// every edge midpoint is equidistant to the labels shared by its ends.
Certificate certify(const VoronoiGraph& g, const Oracle& oracle);

struct GridCheck {
  std::size_t samples = 0;
  std::size_t multi_label = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Compares a k-grid of oracle labels with the graph: samples with two or
/// more labels must lie on a node or edge whose labels cover them, single
/// label samples must lie off the graph.
GridCheck grid_check(const VoronoiGraph& g, const Oracle& oracle, int k);

/// Sites labeling some sample of an n^d lattice over the closed box.
std::vector<int> region_incidence(const AxisBox& box, const Oracle& oracle, int n);

}  // namespace linfvd
