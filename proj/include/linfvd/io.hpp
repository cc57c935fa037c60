// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON documents for shapes and graphs. Rationals travel as "p/q" strings;
// shape coordinates may also be plain JSON integers.

#include <string>

#include "linfvd/reconstruction.hpp"

namespace linfvd {

/// Parses and validates a shape document. Throws MalformedDocument for
/// structural problems and the shape validation codes otherwise. When
/// expected_dim is nonzero, a different document dimension is a
/// DimensionMismatch.
OrthogonalShape read_shape_document(const std::string& text, int expected_dim = 0);

std::string write_shape_document(const OrthogonalShape& shape);

/// Copy of the graph with positions mapped back to input coordinates.
VoronoiGraph to_input_frame(const VoronoiGraph& g, const ScaleRecord& scale);

std::string write_graph_document(const VoronoiGraph& g, const ScaleRecord& scale, bool contracted);

/// Inverse of write_graph_document (scale and flag are validated and dropped).
VoronoiGraph read_graph_document(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace linfvd
