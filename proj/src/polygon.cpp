// SPDX-License-Identifier: Apache-2.0
#include "linfvd/polygon.hpp"

namespace linfvd {

Scalar signed_area2(const Cycle& c) {
  Scalar a = 0;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = c[i];
    const Point& q = c[(i + 1) % n];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return a;
}

Scalar polygon_area(const Polygon& poly) {
  Scalar a = 0;
  for (const auto& c : poly) a += signed_area2(c);
  return a / 2;
}

std::vector<bool> reflex_flags(const Cycle& c) {
  const std::size_t n = c.size();
  std::vector<bool> out(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = c[(i + n - 1) % n];
    const Point& cur = c[i];
    const Point& next = c[(i + 1) % n];
    Scalar cross = (cur[0] - prev[0]) * (next[1] - cur[1]) -
                   (cur[1] - prev[1]) * (next[0] - cur[0]);
    out[i] = sgn(cross) < 0;
  }
  return out;
}

bool on_axis_segment(const Point& a, const Point& b, const Point& p) {
  for (int i = 0; i < p.dim(); ++i) {
    const Scalar& lo = min(a[i], b[i]);
    const Scalar& hi = max(a[i], b[i]);
    if (p[i] < lo || p[i] > hi) return false;
  }
  return true;
}

Containment locate_in_polygon(const Polygon& poly, const Point& p) {
  // Horizontal ray towards +x from (p.x, p.y + eps): a vertical edge at
  // x = e spanning [y0, y1) is crossed iff e > p.x and y0 <= p.y < y1.
  bool inside = false;
  for (const auto& c : poly) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = c[i];
      const Point& b = c[(i + 1) % n];
      if (on_axis_segment(a, b, p)) return Containment::Boundary;
      if (a[0] != b[0]) continue;
      const Scalar& y0 = min(a[1], b[1]);
      const Scalar& y1 = max(a[1], b[1]);
      if (a[0] > p[0] && y0 <= p[1] && p[1] < y1) inside = !inside;
    }
  }
  return inside ? Containment::Inside : Containment::Outside;
}

Aabb polygon_bounds(const Polygon& poly) {
  Aabb b = Aabb::of_point(poly.at(0).at(0));
  for (const auto& c : poly) {
    for (const auto& p : c) b.expand(p);
  }
  return b;
}

}  // namespace linfvd
