// SPDX-License-Identifier: Apache-2.0
#include "linfvd/render.hpp"

#include <cstdio>
#include <sstream>

namespace linfvd {

namespace {

std::string dec(const Scalar& x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x.get_d());
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string render_svg(const VoronoiGraph& g, const OrthogonalShape& shape) {
  const Aabb& b = shape.bounds;
  const Scalar w = b.hi[0] - b.lo[0];
  const Scalar h = b.hi[1] - b.lo[1];
  const Scalar margin = max(w, h) / 20;
  const Scalar stroke = max(w, h) / 300;
  // SVG grows downwards; flip y around the bounding box.
  auto x_of = [&](const Scalar& x) { return dec(x - b.lo[0] + margin); };
  auto y_of = [&](const Scalar& y) { return dec(b.hi[1] - y + margin); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<!-- linfvd render: decimal view, exact values are in the graph document -->\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << dec(w + margin * 2) << ' '
     << dec(h + margin * 2) << "\">\n";
  os << "  <path fill=\"#eeeeee\" fill-rule=\"evenodd\" stroke=\"black\" stroke-width=\"" << dec(stroke)
     << "\" d=\"";
  for (const auto& cycle : shape.polygon) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      os << (i ? " L " : "M ") << x_of(cycle[i][0]) << ' ' << y_of(cycle[i][1]);
    }
    os << " Z ";
  }
  os << "\"/>\n";
  os << "  <g stroke=\"blue\" stroke-width=\"" << dec(stroke) << "\">\n";
  for (const auto& [a, c] : g.edges) {
    const Point& p = g.nodes[static_cast<std::size_t>(a)].position;
    const Point& q = g.nodes[static_cast<std::size_t>(c)].position;
    os << "    <line x1=\"" << x_of(p[0]) << "\" y1=\"" << y_of(p[1]) << "\" x2=\"" << x_of(q[0])
       << "\" y2=\"" << y_of(q[1]) << "\"/>\n";
  }
  os << "  </g>\n  <g fill=\"blue\">\n";
  for (const auto& n : g.nodes) {
    if (n.kind != NodeKind::Vertex) continue;
    os << "    <circle cx=\"" << x_of(n.position[0]) << "\" cy=\"" << y_of(n.position[1]) << "\" r=\""
       << dec(stroke * 2) << "\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

std::string render_obj(const VoronoiGraph& g) {
  std::ostringstream os;
  os << "# linfvd render: decimal view, exact values are in the graph document\n";
  for (const auto& n : g.nodes) {
    os << 'v';
    for (int k = 0; k < 3; ++k) os << ' ' << (k < n.position.dim() ? dec(n.position[k], 9) : "0");
    os << '\n';
  }
  for (const auto& [a, b] : g.edges) os << "l " << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

}  // namespace linfvd
