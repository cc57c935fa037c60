// SPDX-License-Identifier: Apache-2.0
#pragma once

// Voronoi graph assembly from the leaves of a subdivision tree.

#include <utility>
#include <vector>

#include "linfvd/subdivision.hpp"

namespace linfvd {

enum class NodeKind { Bisector, Skeleton, Vertex };

const char* node_kind_name(NodeKind k);

struct VorNode {
  int id = 0;
  NodeKind kind = NodeKind::Bisector;
  Point position;
  std::vector<int> labels;  // ascending site ids
  int owner = -1;           // first leaf that produced the node
};

struct VoronoiGraph {
  int dim = 2;
  std::vector<VorNode> nodes;
  std::vector<std::pair<int, int>> edges;  // first < second, sorted

  std::vector<std::size_t> degrees() const;
};

struct ReconstructionStats {
  std::size_t leaves_processed = 0;
  std::size_t vertex_leaves = 0;
  /// 2D vertices on the zone rim of a same-hull pair.
  std::size_t rim_vertices = 0;
  /// Clipped bisectors with exactly one valid endpoint and no shape corner.
  std::size_t one_sided_clips = 0;
  /// Non-corner nodes lying exactly on a leaf corner.
  std::size_t nodes_on_leaf_corners = 0;
  std::size_t neighbor_pairs = 0;
};

/// Unordered pairs of leaves sharing a (d-1)-dimensional face, each once.
std::vector<std::pair<int, int>> neighbor_pairs(const SubdivisionTree& tree);

/// Closed segment ab inside the closed shape: both ends inside and the open
/// segment meets no site.
bool segment_in_shape(const Point& a, const Point& b, const ShapeIndex& ctx);

/// Connection rule between nodes of neighboring leaves.
bool connectable(const VorNode& u, const VorNode& v, const ShapeIndex& ctx);

VoronoiGraph build_graph(const SubdivisionTree& tree, const ShapeIndex& ctx,
                         ReconstructionStats* stats = nullptr);

/// Removes degree-2 bisector/skeleton nodes, joining their neighbors.
VoronoiGraph contract(const VoronoiGraph& g);

}  // namespace linfvd
