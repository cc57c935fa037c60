// SPDX-License-Identifier: Apache-2.0
#pragma once

// Rectangular decomposition of rectilinear polygons by a kd-tree on reflex
// vertices, and the bounding-volume hierarchy built on top of it.

#include <vector>

#include "linfvd/geometry.hpp"
#include "linfvd/polygon.hpp"

namespace linfvd {

struct RectDecomposition {
  struct KdNode {
    Aabb region;
    int axis = -1;  // -1 for a terminal region
    Scalar split;
    int lower = -1;
    int upper = -1;
    std::vector<int> rects;  // terminal regions only
  };

  /// Interior-disjoint rectangles whose union is the polygon.
  std::vector<Aabb> rectangles;
  /// kd-tree; node 0 is the root (a lone terminal node for convex input).
  std::vector<KdNode> kd;
  int source_id = -1;
  std::size_t reflex_count = 0;

  std::size_t split_count() const;
  std::size_t terminal_count() const;
};

/// Splits alternate x/y starting with x, each through the median reflex
/// vertex strictly inside the current region.
RectDecomposition decompose(const Polygon& poly, int source_id = -1);

class Bvh {
 public:
  struct Node {
    Aabb box;
    int left = -1;
    int right = -1;
    std::vector<int> rects;
    bool leaf() const { return left < 0; }
  };

  Bvh() = default;
  static Bvh build(RectDecomposition dec);

  const RectDecomposition& decomposition() const { return dec_; }
  const std::vector<Aabb>& rectangles() const { return dec_.rectangles; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  std::size_t leaf_count() const;
  std::size_t max_leaf_size() const;

  /// Ids of rectangles meeting q, ascending. strict: q is treated as open.
  std::vector<int> box_query(const Aabb& q, bool strict = false) const;
  /// Ids of rectangles containing p (closed), ascending.
  std::vector<int> point_query(const Point& p) const;

 private:
  int build_node(int kd_index);

  RectDecomposition dec_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace linfvd
