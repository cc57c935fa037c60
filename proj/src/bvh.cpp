// SPDX-License-Identifier: Apache-2.0
#include "linfvd/bvh.hpp"

#include <algorithm>
#include <map>

namespace linfvd {

namespace {

struct VerticalEdge {
  Scalar x, y0, y1;
};

bool strictly_inside(const Aabb& r, const Point& p) {
  for (int i = 0; i < 2; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (!(r.lo[k] < p[i] && p[i] < r.hi[k])) return false;
  }
  return true;
}

Aabb make_rect(const Scalar& x0, const Scalar& y0, const Scalar& x1, const Scalar& y1) {
  Aabb r;
  r.dim = 2;
  r.lo[0] = x0;
  r.lo[1] = y0;
  r.hi[0] = x1;
  r.hi[1] = y1;
  return r;
}

class Decomposer {
 public:
  explicit Decomposer(const Polygon& poly) {
    for (const auto& c : poly) {
      const std::size_t n = c.size();
      auto flags = reflex_flags(c);
      for (std::size_t i = 0; i < n; ++i) {
        const Point& a = c[i];
        const Point& b = c[(i + 1) % n];
        ys_.push_back(a[1]);
        if (a[0] == b[0]) edges_.push_back({a[0], min(a[1], b[1]), max(a[1], b[1])});
        if (flags[i]) reflex_.push_back(a);
      }
    }
    std::sort(ys_.begin(), ys_.end());
    ys_.erase(std::unique(ys_.begin(), ys_.end()), ys_.end());
  }

  RectDecomposition run(const Aabb& root) {
    out_.reflex_count = reflex_.size();
    split(root, reflex_, 0);
    return std::move(out_);
  }

 private:
  int split(const Aabb& region, const std::vector<Point>& verts, int axis) {
    std::vector<Point> inner;
    for (const auto& v : verts) {
      if (strictly_inside(region, v)) inner.push_back(v);
    }
    const int id = static_cast<int>(out_.kd.size());
    out_.kd.emplace_back();
    out_.kd.back().region = region;
    if (inner.empty()) {
      auto rects = terminal_rectangles(region);
      for (auto& r : rects) {
        out_.kd[static_cast<std::size_t>(id)].rects.push_back(
            static_cast<int>(out_.rectangles.size()));
        out_.rectangles.push_back(std::move(r));
      }
      return id;
    }
    const int other = 1 - axis;
    std::sort(inner.begin(), inner.end(), [&](const Point& a, const Point& b) {
      if (a[axis] != b[axis]) return a[axis] < b[axis];
      return a[other] < b[other];
    });
    Scalar s = inner[(inner.size() - 1) / 2][axis];
    Aabb lo = region;
    Aabb hi = region;
    lo.hi[static_cast<std::size_t>(axis)] = s;
    hi.lo[static_cast<std::size_t>(axis)] = s;
    int l = split(lo, inner, other);
    int u = split(hi, inner, other);
    auto& node = out_.kd[static_cast<std::size_t>(id)];
    node.axis = axis;
    node.split = s;
    node.lower = l;
    node.upper = u;
    return id;
  }

  // P intersected with a region free of interior reflex vertices is a
  // disjoint union of rectangles; recover them by sweeping horizontal bands.
  std::vector<Aabb> terminal_rectangles(const Aabb& region) const {
    const Scalar& x0 = region.lo[0];
    const Scalar& x1 = region.hi[0];
    std::vector<Scalar> ys{region.lo[1]};
    for (const auto& y : ys_) {
      if (region.lo[1] < y && y < region.hi[1]) ys.push_back(y);
    }
    ys.push_back(region.hi[1]);

    std::vector<const VerticalEdge*> spanning;
    for (const auto& e : edges_) {
      if (e.y1 > region.lo[1] && e.y0 < region.hi[1]) spanning.push_back(&e);
    }

    std::vector<Aabb> done;
    std::map<std::pair<Scalar, Scalar>, Scalar> open;  // x-interval -> start y
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
      Scalar ym = (ys[k] + ys[k + 1]) / 2;
      std::vector<Scalar> xs;
      for (const auto* e : spanning) {
        if (e->y0 < ym && ym < e->y1) xs.push_back(e->x);
      }
      std::sort(xs.begin(), xs.end());
      std::map<std::pair<Scalar, Scalar>, Scalar> next;
      for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
        Scalar a = max(xs[i], x0);
        Scalar b = min(xs[i + 1], x1);
        if (!(a < b)) continue;
        auto key = std::make_pair(a, b);
        auto it = open.find(key);
        next.emplace(key, it == open.end() ? ys[k] : it->second);
      }
      for (const auto& [key, y_start] : open) {
        if (!next.count(key)) done.push_back(make_rect(key.first, y_start, key.second, ys[k]));
      }
      open = std::move(next);
    }
    for (const auto& [key, y_start] : open) {
      done.push_back(make_rect(key.first, y_start, key.second, ys.back()));
    }
    std::sort(done.begin(), done.end(), [](const Aabb& a, const Aabb& b) {
      if (a.lo[0] != b.lo[0]) return a.lo[0] < b.lo[0];
      return a.lo[1] < b.lo[1];
    });
    return done;
  }

  std::vector<Scalar> ys_;
  std::vector<VerticalEdge> edges_;
  std::vector<Point> reflex_;
  RectDecomposition out_;
};

}  // namespace

std::size_t RectDecomposition::split_count() const {
  return static_cast<std::size_t>(
      std::count_if(kd.begin(), kd.end(), [](const KdNode& n) { return n.axis >= 0; }));
}

std::size_t RectDecomposition::terminal_count() const { return kd.size() - split_count(); }

RectDecomposition decompose(const Polygon& poly, int source_id) {
  if (poly.empty() || poly[0].empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot decompose an empty polygon");
  }
  Decomposer d(poly);
  RectDecomposition out = d.run(polygon_bounds(poly));
  out.source_id = source_id;
  return out;
}

Bvh Bvh::build(RectDecomposition dec) {
  Bvh b;
  b.dec_ = std::move(dec);
  if (!b.dec_.kd.empty()) b.root_ = b.build_node(0);
  return b;
}

int Bvh::build_node(int kd_index) {
  const auto& kn = dec_.kd[static_cast<std::size_t>(kd_index)];
  if (kn.axis < 0) {
    if (kn.rects.empty()) return -1;
    Node n;
    n.rects = kn.rects;
    n.box = dec_.rectangles[static_cast<std::size_t>(kn.rects[0])];
    for (int r : kn.rects) n.box.expand(dec_.rectangles[static_cast<std::size_t>(r)]);
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }
  const int lower = kn.lower;
  const int upper = kn.upper;
  int l = build_node(lower);
  int u = build_node(upper);
  if (l < 0) return u;
  if (u < 0) return l;
  Node n;
  n.left = l;
  n.right = u;
  n.box = nodes_[static_cast<std::size_t>(l)].box;
  n.box.expand(nodes_[static_cast<std::size_t>(u)].box);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

std::size_t Bvh::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.leaf(); }));
}

std::size_t Bvh::max_leaf_size() const {
  std::size_t m = 0;
  for (const auto& n : nodes_) {
    if (n.leaf()) m = std::max(m, n.rects.size());
  }
  return m;
}

std::vector<int> Bvh::box_query(const Aabb& q, bool strict) const {
  std::vector<int> out;
  if (root_ < 0) return out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const Node& n = nodes_[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    if (!boxes_overlap(n.box, q, strict)) continue;
    if (!n.leaf()) {
      stack.push_back(n.left);
      stack.push_back(n.right);
      continue;
    }
    for (int r : n.rects) {
      if (boxes_overlap(dec_.rectangles[static_cast<std::size_t>(r)], q, strict)) {
        out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Bvh::point_query(const Point& p) const {
  return box_query(Aabb::of_point(p), false);
}

}  // namespace linfvd
