// SPDX-License-Identifier: Apache-2.0
#pragma once

// Seeded random rectilinear polygons and orthogonal polyhedra.

#include <cstdint>
#include <vector>

#include "linfvd/shape.hpp"

namespace linfvd {

struct GenSpec {
  std::uint64_t seed = 1;
  int dim = 2;
  int sites = 32;  // target; the result lands within 20%
  int holes = 0;   // 2D only
  int grid = 3;    // largest step, in integer units, between neighboring features
};

/// Builds a validated shape on the integer lattice. Identical specs give
/// identical shapes. Throws InfeasibleSpec for specs it cannot meet.
OrthogonalShape generate(const GenSpec& spec);

/// Boundary facets of a union of unit voxels, merged into maximal planar
/// polygons. Returns false if some facet would have a hole or a pinch.
/// The occupancy is indexed [x][y][z].
bool voxel_facets(const std::vector<std::vector<std::vector<bool>>>& occupied,
                  std::vector<FacetSpec>& out);

}  // namespace linfvd
