// SPDX-License-Identifier: Apache-2.0
#pragma once

// Adaptive quadtree / octree subdivision driven by active site sets.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "linfvd/predicates.hpp"

namespace linfvd {

/// Why a cell stopped subdividing. In 3D only T1..T3 occur (printed with a
/// prime: outside, few sites, single vertex).
enum class Verdict { Subdivided, T1, T2, T3, T4, DepthLimit };

const char* verdict_name(Verdict v, int dim);

struct Cell {
  AxisBox box;
  int depth = 0;
  int parent = -1;
  int first_child = -1;  // children are contiguous, 2^d of them
  std::vector<int> active;
  /// Sites meeting the closed cell, inherited down the tree; the nearest
  /// non-empty list up the ancestry is the frame for point location.
  std::vector<int> touching;
  bool center_inside = false;
  std::vector<int> center_label;
  Scalar delta;
  std::vector<std::vector<int>> corner_labels;  // 2D only
  std::optional<Point> vertex;
  Verdict verdict = Verdict::Subdivided;

  bool leaf() const { return first_child < 0; }
};

struct SubdivisionLimits {
  int max_depth = 32;
  std::size_t max_cells = 2'000'000;
};

struct SubdivisionStats {
  std::size_t cells = 0;
  std::map<Verdict, std::size_t> leaves;
  int max_depth = 0;
  Scalar min_leaf_edge;
  std::vector<std::size_t> active_per_level;
  std::size_t depth_limit_hits = 0;
};

class SubdivisionTree {
 public:
  int dim = 2;
  std::vector<Cell> cells;
  SubdivisionStats stats;

  const Cell& root() const { return cells.front(); }
  const Cell& cell(int i) const { return cells[static_cast<std::size_t>(i)]; }
  int child(int cell, unsigned bits) const { return this->cell(cell).first_child + static_cast<int>(bits); }
  std::vector<int> leaves() const;
  /// Site list used for location tests at points of the cell.
  const std::vector<int>& frame(int cell) const;
};

/// Runs the subdivision on the index's shape over its root box.
SubdivisionTree subdivide(const ShapeIndex& ctx, const SubdivisionLimits& limits = {});

/// Sites labeling p: empty outside the shape, otherwise the D-nearest
/// candidates (same-hull ties as in nearest_sites).
std::vector<int> label_set(const Point& p, const std::vector<int>& candidates,
                           const std::vector<int>& frame, const ShapeIndex& ctx);

/// Number of distinct affine hulls among the sites.
std::size_t hull_classes(const std::vector<int>& sites, const ShapeIndex& ctx);

/// Vertex test over one representative per hull; each hull must have a
/// member whose oriented zone holds the point.
std::optional<Point> class_vertex(const AxisBox& box, const std::vector<int>& sites,
                                  const ShapeIndex& ctx);

}  // namespace linfvd
