// SPDX-License-Identifier: Apache-2.0
#include "linfvd/predicates.hpp"

#include <algorithm>
#include <array>

namespace linfvd {

const char* bvh_mode_name(BvhMode m) {
  switch (m) {
    case BvhMode::Auto: return "auto";
    case BvhMode::On: return "on";
    case BvhMode::Off: return "off";
  }
  return "auto";
}

BvhMode parse_bvh_mode(const std::string& s) {
  if (s == "auto") return BvhMode::Auto;
  if (s == "on") return BvhMode::On;
  if (s == "off") return BvhMode::Off;
  throw Error(ErrorCode::InvalidArgument, "bvh mode must be auto, on or off");
}

// ---------------------------------------------------------------------------
// ShapeIndex

ShapeIndex::ShapeIndex(const OrthogonalShape& shape, BvhMode mode) : shape_(&shape), mode_(mode) {
  if (shape.dim == 3) {
    facet_rects_.reserve(shape.sites.size());
    for (const auto& s : shape.sites) facet_rects_.push_back(decompose(Polygon{s.facet}).rectangles);
  }
  if (shape.dim == 2) {
    if (mode_ == BvhMode::Off) return;
    polygon_bvh_ = Bvh::build(decompose(shape.polygon));
    for (const auto& r : polygon_bvh_.rectangles()) {
      std::vector<int> ids;
      for (const auto& s : shape.sites) {
        if (boxes_overlap(s.bounds, r, false)) ids.push_back(s.id);
      }
      rect_sites_.push_back(std::move(ids));
    }
    return;
  }
  if (mode_ == BvhMode::Off) return;
  facet_bvhs_.reserve(shape.sites.size());
  for (const auto& s : shape.sites) {
    facet_bvhs_.push_back(Bvh::build(decompose(Polygon{s.facet}, s.id)));
  }
}

bool ShapeIndex::use_candidate_bvh(std::size_t parent_active) const {
  if (shape_->dim != 2) return false;
  switch (mode_) {
    case BvhMode::On: return true;
    case BvhMode::Off: return false;
    case BvhMode::Auto: return parent_active > 32;
  }
  return false;
}

bool ShapeIndex::facet_meets_box(int site, const Aabb& plane_box, bool strict) const {
  if (facet_bvh()) {
    return !facet_bvhs_.at(static_cast<std::size_t>(site)).box_query(plane_box, strict).empty();
  }
  return polygon_meets_box(this->site(site).facet, plane_box, strict);
}

std::vector<int> ShapeIndex::sites_near(const Aabb& box) const {
  if (rect_sites_.empty()) {
    throw Error(ErrorCode::MissingBvh, "no polygon hierarchy was built");
  }
  std::vector<int> out;
  for (int r : polygon_bvh_.box_query(box, false)) {
    const auto& ids = rect_sites_[static_cast<std::size_t>(r)];
    out.insert(out.end(), ids.begin(), ids.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Zones and intersection

bool polygon_meets_box(const Cycle& c, const Aabb& box, bool strict) {
  if (strict) {
    for (std::size_t k = 0; k < 2; ++k) {
      if (!(box.lo[k] < box.hi[k])) return false;
    }
  }
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Aabb e = Aabb::of_point(c[i]);
    e.expand(c[(i + 1) % n]);
    if (boxes_overlap(e, box, strict)) return true;
  }
  Point center{(box.lo[0] + box.hi[0]) / 2, (box.lo[1] + box.hi[1]) / 2};
  return locate_in_polygon(Polygon{c}, center) == Containment::Inside;
}

namespace {

// Does the box on aff(s) centered at the projection of `p` with radius r
// meet the closed site? With strict, the box is open.
bool hull_box_meets_site(const Site& s, const Point& p, const Scalar& r, const ShapeIndex* ctx) {
  if (p.dim() == 2) {
    const int u = 1 - s.hull.axis;
    const auto k = static_cast<std::size_t>(u);
    return !(p[u] + r < s.bounds.lo[k] || p[u] - r > s.bounds.hi[k]);
  }
  if (!ctx) throw Error(ErrorCode::MissingBvh, "3D zone queries need a shape index");
  auto [u, v] = plane_axes(3, s.hull.axis);
  Aabb box{2, {p[u] - r, p[v] - r}, {p[u] + r, p[v] + r}};
  return ctx->facet_meets_box(s.id, box, false);
}

}  // namespace

bool in_halfspace(const Point& p, const Site& s) {
  return sgn(p[s.hull.axis] - s.hull.offset) * s.sigma >= 0;
}

bool in_zone(const Point& p, const Site& s, const ShapeIndex* ctx) {
  return hull_box_meets_site(s, p, distance_to_hull(p, s.hull), ctx);
}

std::optional<Scalar> restricted_distance(const Point& p, const Site& s, const ShapeIndex* ctx) {
  if (!in_halfspace(p, s) || !in_zone(p, s, ctx)) return std::nullopt;
  return distance_to_hull(p, s.hull);
}

bool zone_in_cell(const Site& s, const AxisBox& c, const ShapeIndex* ctx) {
  Scalar rho = abs(c.center[s.hull.axis] - s.hull.offset) + c.radius;
  return hull_box_meets_site(s, c.center, c.radius + rho, ctx);
}

bool oriented_zone_in_cell(const Site& s, const AxisBox& c, const ShapeIndex* ctx) {
  Scalar rho = (c.center[s.hull.axis] - s.hull.offset) * s.sigma + c.radius;
  if (sgn(rho) < 0) return false;
  return hull_box_meets_site(s, c.center, c.radius + rho, ctx);
}

bool is_intersecting(const Site& s, const Aabb& box, bool strict, const ShapeIndex* ctx) {
  if (box.dim == 2) return boxes_overlap(s.bounds, box, strict);
  const auto k = static_cast<std::size_t>(s.hull.axis);
  const Scalar& c = s.hull.offset;
  if (strict ? !(box.lo[k] < c && c < box.hi[k]) : (c < box.lo[k] || c > box.hi[k])) {
    return false;
  }
  if (!boxes_overlap(s.bounds, box, false)) return false;
  auto [u, v] = plane_axes(3, s.hull.axis);
  const auto ku = static_cast<std::size_t>(u);
  const auto kv = static_cast<std::size_t>(v);
  Aabb plane{2, {box.lo[ku], box.lo[kv]}, {box.hi[ku], box.hi[kv]}};
  if (ctx) return ctx->facet_meets_box(s.id, plane, strict);
  return polygon_meets_box(s.facet, plane, strict);
}

bool is_intersecting(const Site& s, const AxisBox& c, bool strict, const ShapeIndex* ctx) {
  return is_intersecting(s, c.to_aabb(), strict, ctx);
}

// ---------------------------------------------------------------------------
// Equidistance systems and bisectors

EquidistantSolution solve_equidistant(const std::vector<const Site*>& sites, int dim) {
  const int nv = dim + 1;  // x[0..dim-1], t
  std::vector<std::vector<Scalar>> m;
  for (const Site* s : sites) {
    std::vector<Scalar> row(static_cast<std::size_t>(nv + 1), Scalar(0));
    row[static_cast<std::size_t>(s->hull.axis)] = s->sigma;
    row[static_cast<std::size_t>(dim)] = -1;
    row[static_cast<std::size_t>(nv)] = s->hull.offset * s->sigma;
    m.push_back(std::move(row));
  }
  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < nv && r < m.size(); ++col) {
    const auto c = static_cast<std::size_t>(col);
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Scalar inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Scalar f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  EquidistantSolution out;
  for (std::size_t i = r; i < m.size(); ++i) {
    if (sgn(m[i][static_cast<std::size_t>(nv)]) != 0) return out;
  }
  out.consistent = true;
  out.free_dims = nv - static_cast<int>(r);
  std::vector<Scalar> x(static_cast<std::size_t>(nv), Scalar(0));
  for (std::size_t i = 0; i < r; ++i) {
    x[static_cast<std::size_t>(pivot_col[i])] = m[i][static_cast<std::size_t>(nv)];
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(nv), false);
  for (int pc : pivot_col) is_pivot[static_cast<std::size_t>(pc)] = true;
  for (int f = 0; f < nv; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Scalar> dir(static_cast<std::size_t>(nv), Scalar(0));
    dir[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < r; ++i) {
      dir[static_cast<std::size_t>(pivot_col[i])] = -m[i][static_cast<std::size_t>(f)];
    }
    out.directions.push_back(std::move(dir));
  }
  out.point = Point(dim);
  for (int i = 0; i < dim; ++i) out.point[i] = x[static_cast<std::size_t>(i)];
  out.distance = x[static_cast<std::size_t>(dim)];
  return out;
}

bool Bisector::contains(const Point& p) const {
  Scalar acc = 0;
  for (int i = 0; i < p.dim(); ++i) acc += coef[static_cast<std::size_t>(i)] * p[i];
  return acc == rhs;
}

std::optional<Bisector> affine_bisector(const Site& s1, const Site& s2) {
  if (s1.hull == s2.hull) return std::nullopt;
  Bisector b;
  b.first = s1.id;
  b.second = s2.id;
  const auto k1 = static_cast<std::size_t>(s1.hull.axis);
  const auto k2 = static_cast<std::size_t>(s2.hull.axis);
  if (k1 == k2) {
    if (s1.sigma == s2.sigma) return std::nullopt;
    Scalar mid = (s1.hull.offset + s2.hull.offset) / 2;
    if (sgn(mid - s1.hull.offset) * s1.sigma < 0) return std::nullopt;  // back to back
    b.kind = Bisector::Kind::AxisParallel;
    b.coef[k1] = 1;
    b.rhs = mid;
    return b;
  }
  // sigma1 (x_k1 - c1) = sigma2 (x_k2 - c2)
  b.kind = Bisector::Kind::Diagonal;
  b.coef[k1] = s1.sigma;
  b.coef[k2] = -s2.sigma;
  b.rhs = s1.hull.offset * s1.sigma - s2.hull.offset * s2.sigma;
  return b;
}

std::optional<Point> voronoi_vertex_test(const AxisBox& c, const std::vector<const Site*>& sites,
                                         const ShapeIndex* ctx) {
  if (sites.empty()) return std::nullopt;
  auto sol = solve_equidistant(sites, c.dim());
  if (!sol.consistent || sol.free_dims != 0) return std::nullopt;
  if (!c.contains(sol.point)) return std::nullopt;
  for (const Site* s : sites) {
    if (!restricted_distance(sol.point, *s, ctx)) return std::nullopt;
  }
  return sol.point;
}

// ---------------------------------------------------------------------------
// Location

namespace {

Scalar distance_to_points(const Point& p, const std::vector<Point>& pts) {
  // pts lie on an axis-parallel segment; distance to its bounding box.
  Aabb box = Aabb::of_point(pts.front());
  for (const auto& q : pts) box.expand(q);
  return linf_distance_to_box(p, box);
}

// Is the quarter (3D) or half-ray (2D) of the site's plane leaving v in the
// given in-plane direction covered by the site near v?
bool covers_near(const Site& s, const Point& v, const std::array<int, 3>& dir) {
  const int dim = v.dim();
  if (dim == 2) {
    const int u = 1 - s.hull.axis;
    Point probe = v;
    // Any step smaller than the segment length works once v is on the site.
    Scalar len = s.bounds.hi[static_cast<std::size_t>(u)] - s.bounds.lo[static_cast<std::size_t>(u)];
    probe[u] += len / 2 * dir[static_cast<std::size_t>(u)];
    return s.contains_point(v) && on_axis_segment(s.a, s.b, probe) &&
           !(probe == v);
  }
  auto [u, w] = plane_axes(3, s.hull.axis);
  Scalar gap = -1;
  for (const auto& p : s.facet) {
    for (int i = 0; i < 2; ++i) {
      Scalar g = abs(p[i] - v[i == 0 ? u : w]);
      if (sgn(g) > 0 && (gap < 0 || g < gap)) gap = g;
    }
  }
  if (gap < 0) return false;
  Scalar eps = gap / 4;
  Point q{v[u] + eps * dir[static_cast<std::size_t>(u)], v[w] + eps * dir[static_cast<std::size_t>(w)]};
  return locate_in_polygon(Polygon{s.facet}, q) == Containment::Inside;
}

// Membership of p from the local structure of P at vertex v, given the
// sites incident to v: flood the orthants of v, flipping across walls
// covered by a site.
bool orthant_rule(const Point& p, const Point& v, const std::vector<const Site*>& walls) {
  const int dim = v.dim();
  const unsigned count = 1u << dim;
  auto sign_of = [](unsigned bits, int i) { return (bits >> i) & 1u ? 1 : -1; };
  auto wall_covered = [&](unsigned bits, int axis) {
    std::array<int, 3> dir{};
    for (int i = 0; i < dim; ++i) dir[static_cast<std::size_t>(i)] = sign_of(bits, i);
    for (const Site* s : walls) {
      if (s->hull.axis == axis && s->hull.offset == v[axis] && covers_near(*s, v, dir)) return true;
    }
    return false;
  };
  std::vector<int> state(count, -1);
  // Seed: the orthant on the interior side of a covered quarter of walls[0].
  const Site& s0 = *walls.front();
  bool seeded = false;
  for (unsigned bits = 0; bits < count && !seeded; ++bits) {
    if (sign_of(bits, s0.hull.axis) != s0.sigma) continue;
    if (wall_covered(bits, s0.hull.axis)) {
      std::vector<unsigned> queue{bits};
      state[bits] = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        unsigned b = queue[h];
        for (int axis = 0; axis < dim; ++axis) {
          unsigned nb = b ^ (1u << axis);
          if (state[nb] != -1) continue;
          state[nb] = wall_covered(b, axis) ? 1 - state[b] : state[b];
          queue.push_back(nb);
        }
      }
      seeded = true;
    }
  }
  if (!seeded) {
    throw Error(ErrorCode::InternalInconsistency, "corner walls do not cover any quarter");
  }
  for (unsigned bits = 0; bits < count; ++bits) {
    bool compatible = true;
    for (int i = 0; i < dim && compatible; ++i) {
      int sg = sgn(p[i] - v[i]);
      if (sg != 0 && sg != sign_of(bits, i)) compatible = false;
    }
    if (compatible && state[bits] == 1) return true;
  }
  return false;
}

}  // namespace

bool location_test(const Point& p, const std::vector<int>& candidates, const ShapeIndex& ctx) {
  if (candidates.empty()) return true;
  std::vector<int> R;
  Scalar best = -1;
  for (int id : candidates) {
    const Site& s = ctx.site(id);
    if (!in_zone(p, s, &ctx)) continue;
    Scalar d = distance_to_hull(p, s.hull);
    if (best < 0 || d < best) {
      best = d;
      R.clear();
    }
    if (d == best) R.push_back(id);
  }
  if (R.empty()) {
    throw Error(ErrorCode::InternalInconsistency, "no candidate site has the point in its zone");
  }
  if (sgn(best) == 0) return true;  // p lies on a site
  const Site& s = ctx.site(R[0]);
  struct Touch {
    const Site* site;
    std::vector<Point> shared;
  };
  std::vector<Touch> touching;
  for (std::size_t i = 1; i < R.size(); ++i) {
    const Site& o = ctx.site(R[i]);
    auto pts = shared_points(s, o);
    if (!pts.empty()) touching.push_back({&o, std::move(pts)});
  }
  if (touching.empty()) return in_halfspace(p, s);

  const OrthogonalShape& shape = ctx.shape();
  if (shape.dim == 3) {
    // Prefer a vertex shared by s and two further candidates.
    const ShapeCorner* best_corner = nullptr;
    Scalar best_d = -1;
    for (std::size_t i = 0; i < touching.size(); ++i) {
      for (std::size_t j = i + 1; j < touching.size(); ++j) {
        const Site* a = touching[i].site;
        const Site* b = touching[j].site;
        if (a->hull.axis == b->hull.axis) continue;
        Point v(3);
        v[s.hull.axis] = s.hull.offset;
        v[a->hull.axis] = a->hull.offset;
        v[b->hull.axis] = b->hull.offset;
        const ShapeCorner* k = shape.corner_at(v);
        if (!k) continue;
        Scalar d = linf_distance(p, v);
        if (best_d < 0 || d < best_d) {
          best_d = d;
          best_corner = k;
        }
      }
    }
    if (best_corner) {
      std::vector<const Site*> walls;
      for (int id : best_corner->sites) walls.push_back(&ctx.site(id));
      return orthant_rule(p, best_corner->position, walls);
    }
  }
  // Two-site corner (2D vertex or 3D edge) nearest to p.
  std::size_t pick = 0;
  Scalar pick_d = distance_to_points(p, touching[0].shared);
  for (std::size_t i = 1; i < touching.size(); ++i) {
    Scalar d = distance_to_points(p, touching[i].shared);
    if (d < pick_d) {
      pick_d = d;
      pick = i;
    }
  }
  const Site& o = *touching[pick].site;
  bool reflex = site_corner(shape, s.id, o.id).reflex;
  return reflex ? (in_halfspace(p, s) || in_halfspace(p, o))
                : (in_halfspace(p, s) && in_halfspace(p, o));
}

bool zone_along(const Point& p, const Site& s, const std::array<int, 3>& v, const ShapeIndex& ctx) {
  const int k = s.hull.axis;
  const Scalar d = distance_to_hull(p, s.hull);
  const int slope = s.sigma * v[static_cast<std::size_t>(k)];
  if (!in_halfspace(p, s) || (sgn(d) == 0 && slope <= 0)) return false;

  // The hull box at p + eps*v has radius d + eps*slope; compare its faces
  // with each rectangle to first order in eps.
  auto meets = [&](const Aabb& r, int axis, std::size_t slot) {
    const Scalar& c = p[axis];
    const int vi = v[static_cast<std::size_t>(axis)];
    const Scalar lo = c - d, hi = c + d;
    const bool low_ok = r.hi[slot] > lo || (r.hi[slot] == lo && vi - slope <= 0);
    const bool high_ok = r.lo[slot] < hi || (r.lo[slot] == hi && vi + slope >= 0);
    return low_ok && high_ok;
  };
  if (p.dim() == 2) return meets(s.bounds, 1 - k, static_cast<std::size_t>(1 - k));
  auto [u, w] = plane_axes(3, k);
  const auto& rects = ctx.facet_rects(s.id);
  return std::any_of(rects.begin(), rects.end(),
                     [&](const Aabb& r) { return meets(r, u, 0) && meets(r, w, 1); });
}

namespace {

// One direction inside every open cone of the fan v_i = 0, v_i = +-v_j.
const std::vector<std::array<int, 3>>& probe_directions(int dim) {
  static const auto build = [](int n) {
    std::array<int, 3> mags = n == 2 ? std::array<int, 3>{1, 2, 0} : std::array<int, 3>{1, 3, 9};
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> perm{0, 1, 2};
    do {
      if (n == 2 && perm[2] != 2) continue;
      for (int signs = 0; signs < (1 << n); ++signs) {
        std::array<int, 3> v{};
        for (int i = 0; i < n; ++i) {
          const int m = mags[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
          v[static_cast<std::size_t>(i)] = (signs >> i) & 1 ? -m : m;
        }
        out.push_back(v);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  };
  static const auto two = build(2), three = build(3);
  return dim == 2 ? two : three;
}

}  // namespace

std::vector<int> closure_labels(const Point& p, const std::vector<int>& tied, const ShapeIndex& ctx) {
  if (tied.size() < 2) return tied;
  std::vector<char> reached(tied.size(), 0);
  for (const auto& v : probe_directions(p.dim())) {
    std::size_t winner = tied.size();
    int best = 0;
    for (std::size_t i = 0; i < tied.size(); ++i) {
      const Site& s = ctx.site(tied[i]);
      const int slope = s.sigma * v[static_cast<std::size_t>(s.hull.axis)];
      if (winner < tied.size() && slope > best) continue;
      if (winner < tied.size() && slope == best && tied[i] < tied[winner]) continue;
      if (!zone_along(p, s, v, ctx)) continue;
      winner = i;
      best = slope;
    }
    if (winner < tied.size()) reached[winner] = 1;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < tied.size(); ++i) {
    if (reached[i]) out.push_back(tied[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> nearest_sites(const Point& p, const std::vector<int>& candidates,
                               const ShapeIndex& ctx, Scalar* distance) {
  std::vector<int> best_ids;
  Scalar best = -1;
  for (int id : candidates) {
    auto d = restricted_distance(p, ctx.site(id), &ctx);
    if (!d) continue;
    if (best < 0 || *d < best) {
      best = *d;
      best_ids.clear();
    }
    if (*d == best) best_ids.push_back(id);
  }
  if (distance) *distance = best;
  return closure_labels(p, best_ids, ctx);
}

}  // namespace linfvd
