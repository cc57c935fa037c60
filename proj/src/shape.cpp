// SPDX-License-Identifier: Apache-2.0
#include "linfvd/shape.hpp"

#include <algorithm>
#include <sstream>

namespace linfvd {

namespace {

std::string fmt(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

struct EdgeRef {
  std::size_t cycle;
  std::size_t index;
  Aabb box;
};

Point point2(const Scalar& u, const Scalar& v) { return Point{u, v}; }

}  // namespace

// ---------------------------------------------------------------------------
// Site / ScaleRecord

bool Site::contains_point(const Point& p) const {
  if (p[hull.axis] != hull.offset) return false;
  if (p.dim() == 2) return on_axis_segment(a, b, p);
  auto [u, v] = plane_axes(3, hull.axis);
  return locate_in_polygon(Polygon{facet}, point2(p[u], p[v])) != Containment::Outside;
}

Point ScaleRecord::to_input(const Point& unit) const {
  Point out(unit.dim());
  for (int i = 0; i < unit.dim(); ++i) out[i] = unit[i] * factor + offset[i];
  return out;
}

Point ScaleRecord::to_unit(const Point& input) const {
  Point out(input.dim());
  for (int i = 0; i < input.dim(); ++i) out[i] = (input[i] - offset[i]) / factor;
  return out;
}

// ---------------------------------------------------------------------------
// Cycle validation

Cycle validate_cycle(Cycle c, const std::string& what) {
  if (c.size() > 1 && c.front() == c.back()) c.pop_back();
  if (c.size() < 4) {
    throw Error(ErrorCode::NotClosed, what + " has fewer than 4 distinct vertices");
  }
  for (const auto& p : c) {
    if (p.dim() != 2) throw Error(ErrorCode::DimensionMismatch, what + ": vertex is not 2D");
  }
  const std::size_t n = c.size();
  std::vector<int> dir(n);  // axis along which edge i runs
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = c[i];
    const Point& b = c[(i + 1) % n];
    if (a == b) {
      throw Error(ErrorCode::MalformedDocument,
                  what + ": duplicate consecutive vertex " + std::to_string(i) + " " + fmt(a));
    }
    if (a[0] != b[0] && a[1] != b[1]) {
      throw Error(ErrorCode::NotAxisAligned, what + ": edge " + std::to_string(i) + " " +
                                                 fmt(a) + "-" + fmt(b));
    }
    dir[i] = a[1] == b[1] ? 0 : 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dir[i] == dir[(i + n - 1) % n]) {
      throw Error(ErrorCode::MalformedDocument,
                  what + ": collinear vertex " + std::to_string(i) + " " + fmt(c[i]));
    }
  }
  // Simplicity within the cycle.
  std::map<Point, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = seen.emplace(c[i], i);
    if (!fresh) {
      throw Error(ErrorCode::NonManifoldVertex, what + ": vertex " + fmt(c[i]) +
                                                    " repeats (indices " +
                                                    std::to_string(it->second) + ", " +
                                                    std::to_string(i) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Aabb ei = Aabb::of_point(c[i]);
    ei.expand(c[(i + 1) % n]);
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      Aabb ej = Aabb::of_point(c[j]);
      ej.expand(c[(j + 1) % n]);
      if (boxes_overlap(ei, ej, false)) {
        throw Error(ErrorCode::SelfIntersecting,
                    what + ": edges " + std::to_string(i) + " and " + std::to_string(j) +
                        " intersect near " + fmt(c[i]));
      }
    }
  }
  return c;
}

bool cycle_contains_perturbed(const Cycle& c, const Scalar& u, const Scalar& v) {
  bool inside = false;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = c[i];
    const Point& b = c[(i + 1) % n];
    if (a[0] != b[0]) continue;
    if (a[0] > u && min(a[1], b[1]) <= v && v < max(a[1], b[1])) inside = !inside;
  }
  return inside;
}

// ---------------------------------------------------------------------------
// OrthogonalShape

int OrthogonalShape::hole_count() const {
  return dim == 2 ? static_cast<int>(polygon.size()) - 1 : 0;
}

std::size_t OrthogonalShape::vertex_count() const { return corners.size(); }

Containment OrthogonalShape::locate(const Point& p) const {
  if (p.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "point vs shape dimension");
  if (dim == 2) return locate_in_polygon(polygon, p);
  for (const auto& s : sites) {
    if (s.contains_point(p)) return Containment::Boundary;
  }
  // Ray towards +x from the perturbed point (x, y + e, z + e^2).
  bool inside = false;
  for (const auto& s : sites) {
    if (s.hull.axis != 0 || s.hull.offset <= p[0]) continue;
    if (cycle_contains_perturbed(s.facet, p[1], p[2])) inside = !inside;
  }
  return inside ? Containment::Inside : Containment::Outside;
}

const ShapeCorner* OrthogonalShape::corner_at(const Point& p) const {
  auto it = corner_index_.find(p);
  return it == corner_index_.end() ? nullptr : &corners[it->second];
}

void OrthogonalShape::index_corners() {
  corner_index_.clear();
  for (std::size_t i = 0; i < corners.size(); ++i) corner_index_[corners[i].position] = i;
}

AxisBox OrthogonalShape::root_box() const {
  Point c(dim);
  Scalar extent = 0;
  for (int i = 0; i < dim; ++i) {
    auto k = static_cast<std::size_t>(i);
    c[i] = (bounds.lo[k] + bounds.hi[k]) / 2;
    Scalar e = bounds.hi[k] - bounds.lo[k];
    if (e > extent) extent = e;
  }
  return AxisBox(c, extent / 2);
}

// ---------------------------------------------------------------------------
// 2D construction

OrthogonalShape build_shape_2d(Cycle outer, std::vector<Cycle> holes) {
  OrthogonalShape shape;
  shape.dim = 2;
  shape.polygon.push_back(validate_cycle(std::move(outer), "outer boundary"));
  for (std::size_t h = 0; h < holes.size(); ++h) {
    shape.polygon.push_back(validate_cycle(std::move(holes[h]), "hole " + std::to_string(h)));
  }
  Polygon& poly = shape.polygon;
  if (sgn(signed_area2(poly[0])) < 0) std::reverse(poly[0].begin(), poly[0].end());
  for (std::size_t h = 1; h < poly.size(); ++h) {
    if (sgn(signed_area2(poly[h])) > 0) std::reverse(poly[h].begin(), poly[h].end());
  }

  // Cross-cycle checks: shared vertices, touching or crossing edges.
  std::map<Point, std::size_t> owner;
  for (std::size_t c = 0; c < poly.size(); ++c) {
    for (const auto& p : poly[c]) {
      auto [it, fresh] = owner.emplace(p, c);
      if (!fresh) {
        throw Error(ErrorCode::NonManifoldVertex,
                    "vertex " + fmt(p) + " shared by cycles " + std::to_string(it->second) +
                        " and " + std::to_string(c));
      }
    }
  }
  std::vector<EdgeRef> edges;
  for (std::size_t c = 0; c < poly.size(); ++c) {
    const std::size_t n = poly[c].size();
    for (std::size_t i = 0; i < n; ++i) {
      Aabb box = Aabb::of_point(poly[c][i]);
      box.expand(poly[c][(i + 1) % n]);
      edges.push_back({c, i, box});
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].cycle == edges[j].cycle) continue;
      if (boxes_overlap(edges[i].box, edges[j].box, false)) {
        throw Error(ErrorCode::SelfIntersecting,
                    "edge " + std::to_string(edges[i].index) + " of cycle " +
                        std::to_string(edges[i].cycle) + " meets edge " +
                        std::to_string(edges[j].index) + " of cycle " +
                        std::to_string(edges[j].cycle));
      }
    }
  }
  for (std::size_t h = 1; h < poly.size(); ++h) {
    const Point& probe = poly[h][0];
    if (locate_in_polygon(Polygon{poly[0]}, probe) != Containment::Inside) {
      throw Error(ErrorCode::HoleOutsideOuter,
                  "hole " + std::to_string(h - 1) + " vertex " + fmt(probe));
    }
    for (std::size_t g = 1; g < poly.size(); ++g) {
      if (g != h && locate_in_polygon(Polygon{poly[g]}, probe) == Containment::Inside) {
        throw Error(ErrorCode::HoleOutsideOuter, "hole " + std::to_string(h - 1) +
                                                     " lies inside hole " +
                                                     std::to_string(g - 1));
      }
    }
  }

  // Sites and corners.
  for (const auto& c : poly) {
    const std::size_t n = c.size();
    const int first = static_cast<int>(shape.sites.size());
    auto flags = reflex_flags(c);
    for (std::size_t i = 0; i < n; ++i) {
      Site s;
      s.id = static_cast<int>(shape.sites.size());
      s.a = c[i];
      s.b = c[(i + 1) % n];
      if (s.a[1] == s.b[1]) {
        s.hull = {1, s.a[1]};
        s.sigma = s.b[0] > s.a[0] ? 1 : -1;
      } else {
        s.hull = {0, s.a[0]};
        s.sigma = s.b[1] > s.a[1] ? -1 : 1;
      }
      s.bounds = Aabb::of_point(s.a);
      s.bounds.expand(s.b);
      shape.sites.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < n; ++i) {
      ShapeCorner k;
      k.position = c[i];
      int prev = first + static_cast<int>((i + n - 1) % n);
      int cur = first + static_cast<int>(i);
      k.sites = {std::min(prev, cur), std::max(prev, cur)};
      k.reflex = flags[i];
      shape.corners.push_back(std::move(k));
    }
  }
  shape.bounds = polygon_bounds(poly);
  shape.scale.offset = Point(2);
  shape.index_corners();
  return shape;
}

// ---------------------------------------------------------------------------
// Scaling and derived queries

OrthogonalShape scale_to_unit(const OrthogonalShape& shape) {
  const int d = shape.dim;
  AxisBox root = shape.root_box();
  if (sgn(root.radius) == 0) throw Error(ErrorCode::Degenerate, "shape has zero extent");
  Scalar factor = root.radius * 2;
  Point offset(d);
  for (int i = 0; i < d; ++i) offset[i] = root.center[i] - root.radius;
  ScaleRecord rec{offset, factor};

  OrthogonalShape out;
  if (d == 2) {
    Polygon poly = shape.polygon;
    for (auto& c : poly)
      for (auto& p : c) p = rec.to_unit(p);
    Cycle outer = poly[0];
    std::vector<Cycle> holes(poly.begin() + 1, poly.end());
    out = build_shape_2d(std::move(outer), std::move(holes));
  } else {
    std::vector<FacetSpec> facets = shape.facets;
    for (auto& f : facets) {
      auto [u, v] = plane_axes(3, f.axis);
      f.offset = (f.offset - offset[f.axis]) / factor;
      for (auto& p : f.outer) {
        p = Point{(p[0] - offset[u]) / factor, (p[1] - offset[v]) / factor};
      }
    }
    out = build_shape_3d(std::move(facets));
  }
  // Compose with any earlier scaling so to_input still reaches the document frame.
  ScaleRecord composed;
  composed.factor = shape.scale.factor * factor;
  composed.offset = shape.scale.to_input(offset);
  out.scale = composed;
  return out;
}

std::vector<Point> reflex_vertices(const OrthogonalShape& shape) {
  if (shape.dim != 2) {
    throw Error(ErrorCode::DimensionMismatch, "reflex_vertices is defined for 2D shapes");
  }
  std::vector<Point> out;
  for (const auto& k : shape.corners) {
    if (k.reflex) out.push_back(k.position);
  }
  return out;
}

std::vector<Point> shared_points(const Site& a, const Site& b) {
  std::vector<Point> out;
  if (!boxes_overlap(a.bounds, b.bounds, false)) return out;
  const int dim = a.bounds.dim;
  if (dim == 2) {
    Aabb shared = a.bounds;
    for (std::size_t k = 0; k < 2; ++k) {
      shared.lo[k] = max(a.bounds.lo[k], b.bounds.lo[k]);
      shared.hi[k] = min(a.bounds.hi[k], b.bounds.hi[k]);
    }
    out.push_back(shared.min_corner());
    if (!(shared.min_corner() == shared.max_corner())) out.push_back(shared.max_corner());
    return out;
  }
  if (a.hull.axis == b.hull.axis) return out;
  const int run = 3 - a.hull.axis - b.hull.axis;
  const auto r = static_cast<std::size_t>(run);
  std::vector<Scalar> ts{max(a.bounds.lo[r], b.bounds.lo[r]), min(a.bounds.hi[r], b.bounds.hi[r])};
  for (const auto* s : {&a, &b}) {
    auto [u, v] = plane_axes(3, s->hull.axis);
    (void)v;
    for (const auto& p : s->facet) {
      Scalar t = run == u ? p[0] : p[1];
      if (ts[0] < t && t < ts[1]) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Scalar> probes = ts;
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) probes.push_back((ts[k] + ts[k + 1]) / 2);
  std::sort(probes.begin(), probes.end());
  for (const auto& t : probes) {
    Point p(3);
    p[a.hull.axis] = a.hull.offset;
    p[b.hull.axis] = b.hull.offset;
    p[run] = t;
    if (a.contains_point(p) && b.contains_point(p)) out.push_back(p);
  }
  return out;
}

SiteCorner site_corner(const OrthogonalShape& shape, int s1, int s2) {
  const int n = static_cast<int>(shape.sites.size());
  if (s1 < 0 || s2 < 0 || s1 >= n || s2 >= n) {
    throw Error(ErrorCode::InvalidArgument, "site id out of range");
  }
  const Site& a = shape.sites[static_cast<std::size_t>(s1)];
  const Site& b = shape.sites[static_cast<std::size_t>(s2)];
  std::vector<Point> pts;
  if (a.hull.axis != b.hull.axis) pts = shared_points(a, b);
  if (pts.empty()) {
    throw Error(ErrorCode::NotAdjacent,
                "sites " + std::to_string(s1) + " and " + std::to_string(s2));
  }
  SiteCorner out;
  out.first = pts.front();
  out.second = pts.back();
  // Convex iff a leaves the contact towards b's interior side. Step from a
  // contact point along b's axis by less than any feature of a.
  Point m = pts.size() > 1 ? midpoint(pts[0], pts[1]) : pts[0];
  const int kb = b.hull.axis;
  const auto k = static_cast<std::size_t>(kb);
  Scalar step = a.bounds.hi[k] - a.bounds.lo[k];
  if (shape.dim == 3) {
    int in_plane = plane_axes(3, a.hull.axis).first == kb ? 0 : 1;
    for (const auto& p : a.facet) {
      Scalar g = abs(p[in_plane] - b.hull.offset);
      if (sgn(g) > 0 && g < step) step = g;
    }
  }
  Point probe = m;
  probe[kb] += step / 2 * b.sigma;
  out.reflex = !a.contains_point(probe);
  return out;
}

}  // namespace linfvd
