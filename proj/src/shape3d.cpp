// SPDX-License-Identifier: Apache-2.0
// Construction and validation of orthogonal polyhedra from facet lists.
#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "linfvd/shape.hpp"

namespace linfvd {

namespace {

std::string fmt(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Point embed(int axis, const Scalar& offset, const Point& uv) {
  auto [u, v] = plane_axes(3, axis);
  Point p(3);
  p[axis] = offset;
  p[u] = uv[0];
  p[v] = uv[1];
  return p;
}

Containment locate_in_facet(const Site& s, const Point& p) {
  if (p[s.hull.axis] != s.hull.offset) return Containment::Outside;
  auto [u, v] = plane_axes(3, s.hull.axis);
  return locate_in_polygon(Polygon{s.facet}, Point{p[u], p[v]});
}

// Every elementary piece of every facet edge must be shared by exactly two
// facets, which must be perpendicular.
void check_edge_coverage(const std::vector<Site>& sites) {
  struct Piece {
    Scalar t0, t1;
    int site;
  };
  // key: running axis, the two fixed coordinates (ascending remaining axes)
  std::map<std::tuple<int, Scalar, Scalar>, std::vector<Piece>> lines;
  for (const auto& s : sites) {
    const std::size_t n = s.facet.size();
    for (std::size_t i = 0; i < n; ++i) {
      Point a = embed(s.hull.axis, s.hull.offset, s.facet[i]);
      Point b = embed(s.hull.axis, s.hull.offset, s.facet[(i + 1) % n]);
      int run = 0;
      while (a[run] == b[run]) ++run;
      auto [f0, f1] = plane_axes(3, run);
      lines[{run, a[f0], a[f1]}].push_back({min(a[run], b[run]), max(a[run], b[run]), s.id});
    }
  }
  for (const auto& [key, pieces] : lines) {
    std::vector<Scalar> ts;
    for (const auto& pc : pieces) {
      ts.push_back(pc.t0);
      ts.push_back(pc.t1);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      Scalar mid = (ts[k] + ts[k + 1]) / 2;
      std::vector<int> cover;
      for (const auto& pc : pieces) {
        if (pc.t0 < mid && mid < pc.t1) cover.push_back(pc.site);
      }
      if (cover.empty()) continue;
      auto [run, c0, c1] = key;
      auto [f0, f1] = plane_axes(3, run);
      Point at(3);
      at[run] = mid;
      at[f0] = c0;
      at[f1] = c1;
      if (cover.size() == 1) {
        throw Error(ErrorCode::NotClosed, "edge through " + fmt(at) + " bounds only facet " +
                                              std::to_string(cover[0]));
      }
      if (cover.size() > 2) {
        throw Error(ErrorCode::NonManifoldVertex,
                    "edge through " + fmt(at) + " is shared by " +
                        std::to_string(cover.size()) + " facets");
      }
      const auto& s0 = sites[static_cast<std::size_t>(cover[0])];
      const auto& s1 = sites[static_cast<std::size_t>(cover[1])];
      if (s0.hull.axis == s1.hull.axis) {
        throw Error(ErrorCode::MalformedDocument,
                    "coplanar facets " + std::to_string(s0.id) + " and " +
                        std::to_string(s1.id) + " share an edge and must be merged");
      }
    }
  }
}

void check_pair_intersections(const std::vector<Site>& sites) {
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      const Site& a = sites[i];
      const Site& b = sites[j];
      if (!boxes_overlap(a.bounds, b.bounds, false)) continue;
      if (a.hull.axis == b.hull.axis) {
        if (a.hull.offset != b.hull.offset) continue;
        // Coplanar: probe the centers of the joint coordinate grid.
        std::vector<Scalar> us, vs;
        for (const auto* s : {&a, &b}) {
          for (const auto& p : s->facet) {
            us.push_back(p[0]);
            vs.push_back(p[1]);
          }
        }
        for (auto* xs : {&us, &vs}) {
          std::sort(xs->begin(), xs->end());
          xs->erase(std::unique(xs->begin(), xs->end()), xs->end());
        }
        for (std::size_t x = 0; x + 1 < us.size(); ++x) {
          for (std::size_t y = 0; y + 1 < vs.size(); ++y) {
            Point c{(us[x] + us[x + 1]) / 2, (vs[y] + vs[y + 1]) / 2};
            if (locate_in_polygon(Polygon{a.facet}, c) == Containment::Inside &&
                locate_in_polygon(Polygon{b.facet}, c) == Containment::Inside) {
              throw Error(ErrorCode::SelfIntersecting,
                          "coplanar facets " + std::to_string(a.id) + " and " +
                              std::to_string(b.id) + " overlap");
            }
          }
        }
        continue;
      }
      // Perpendicular: compare both facets along their common line.
      const int run = 3 - a.hull.axis - b.hull.axis;
      const auto r = static_cast<std::size_t>(run);
      std::vector<Scalar> ts;
      for (const auto* s : {&a, &b}) {
        ts.push_back(s->bounds.lo[r]);
        ts.push_back(s->bounds.hi[r]);
        auto [u, v] = plane_axes(3, s->hull.axis);
        for (const auto& p : s->facet) ts.push_back(run == u ? p[0] : p[1]);
        (void)v;
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      std::vector<Scalar> probes = ts;
      for (std::size_t k = 0; k + 1 < ts.size(); ++k) probes.push_back((ts[k] + ts[k + 1]) / 2);
      for (const auto& t : probes) {
        Point p(3);
        p[a.hull.axis] = a.hull.offset;
        p[b.hull.axis] = b.hull.offset;
        p[run] = t;
        Containment la = locate_in_facet(a, p);
        Containment lb = locate_in_facet(b, p);
        if ((la == Containment::Inside && lb != Containment::Outside) ||
            (lb == Containment::Inside && la != Containment::Outside)) {
          throw Error(ErrorCode::SelfIntersecting, "facets " + std::to_string(a.id) + " and " +
                                                       std::to_string(b.id) + " cross at " +
                                                       fmt(p));
        }
      }
    }
  }
}

}  // namespace

OrthogonalShape build_shape_3d(std::vector<FacetSpec> facets) {
  if (facets.size() < 6) {
    throw Error(ErrorCode::NotClosed, "a closed orthogonal polyhedron needs at least 6 facets");
  }
  OrthogonalShape shape;
  shape.dim = 3;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    FacetSpec& f = facets[i];
    const std::string what = "facet " + std::to_string(i);
    if (f.axis < 0 || f.axis > 2) throw Error(ErrorCode::MalformedDocument, what + ": bad axis");
    if (f.interior_sign != 1 && f.interior_sign != -1) {
      throw Error(ErrorCode::MalformedDocument, what + ": interior_sign must be +1 or -1");
    }
    f.outer = validate_cycle(std::move(f.outer), what);
    if (sgn(signed_area2(f.outer)) < 0) std::reverse(f.outer.begin(), f.outer.end());
    Site s;
    s.id = static_cast<int>(i);
    s.hull = {f.axis, f.offset};
    s.sigma = f.interior_sign;
    s.facet = f.outer;
    s.bounds = Aabb::of_point(embed(f.axis, f.offset, f.outer[0]));
    for (const auto& p : f.outer) s.bounds.expand(embed(f.axis, f.offset, p));
    shape.sites.push_back(std::move(s));
  }
  shape.facets = facets;

  check_edge_coverage(shape.sites);
  check_pair_intersections(shape.sites);

  // Every vertex must belong to exactly three facets.
  std::set<Point> vertices;
  for (const auto& s : shape.sites) {
    for (const auto& p : s.facet) vertices.insert(embed(s.hull.axis, s.hull.offset, p));
  }
  for (const auto& v : vertices) {
    ShapeCorner k;
    k.position = v;
    for (const auto& s : shape.sites) {
      if (s.bounds.contains(v) && s.contains_point(v)) k.sites.push_back(s.id);
    }
    if (k.sites.size() != 3) {
      throw Error(ErrorCode::NonManifoldVertex,
                  "vertex " + fmt(v) + " lies on " + std::to_string(k.sites.size()) + " facets");
    }
    shape.corners.push_back(std::move(k));
  }

  shape.bounds = shape.sites[0].bounds;
  for (const auto& s : shape.sites) shape.bounds.expand(s.bounds);
  shape.scale.offset = Point(3);
  shape.index_corners();

  // Interior orientation: step off each facet near its first vertex by less
  // than any coordinate gap; the probe then lies on no facet plane.
  Scalar gap = -1;
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<Scalar> xs;
    for (const auto& v : vertices) xs.push_back(v[axis]);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      Scalar g = xs[k + 1] - xs[k];
      if (gap < 0 || g < gap) gap = g;
    }
  }
  const Scalar eps = gap / 4;
  for (const auto& s : shape.sites) {
    const Point& a = s.facet[0];
    const Point& b = s.facet[1];
    Point q = a;
    int along = a[0] == b[0] ? 1 : 0;
    int dir = b[along] > a[along] ? 1 : -1;
    q[along] += eps * dir;
    // Interior lies to the left of a->b.
    int across = 1 - along;
    int left = along == 0 ? dir : -dir;
    q[across] += eps * left;
    Point probe = embed(s.hull.axis, s.hull.offset + eps * s.sigma, q);
    if (shape.locate(probe) != Containment::Inside) {
      throw Error(ErrorCode::MalformedDocument,
                  "facet " + std::to_string(s.id) + ": interior_sign points out of the solid");
    }
  }
  return shape;
}

}  // namespace linfvd
