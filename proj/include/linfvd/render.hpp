// SPDX-License-Identifier: Apache-2.0
#pragma once

// Lossy decimal views of a graph. The graph document stays the exact record.

#include <string>

#include "linfvd/reconstruction.hpp"

namespace linfvd {

/// Shape outline with holes, diagram edges in blue, vertex markers. The
/// graph and shape must share a coordinate frame.
std::string render_svg(const VoronoiGraph& g, const OrthogonalShape& shape);

/// Wavefront OBJ line set: one `v` per node, one `l` per edge.
std::string render_obj(const VoronoiGraph& g);

}  // namespace linfvd
