// SPDX-License-Identifier: Apache-2.0
#include "linfvd/reconstruction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "linfvd/bvh.hpp"

namespace linfvd {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Bisector: return "bisector";
    case NodeKind::Skeleton: return "skeleton";
    case NodeKind::Vertex: return "vertex";
  }
  return "?";
}

std::vector<std::size_t> VoronoiGraph::degrees() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const auto& [a, b] : edges) {
    deg[static_cast<std::size_t>(a)]++;
    deg[static_cast<std::size_t>(b)]++;
  }
  return deg;
}

// ---------------------------------------------------------------------------
// Neighbor enumeration

namespace {

class FaceWalker {
 public:
  explicit FaceWalker(const SubdivisionTree& t) : t_(t), kids_(1u << t.dim) {}

  void cell_proc(int c) {
    if (t_.cell(c).leaf()) return;
    for (unsigned b = 0; b < kids_; ++b) cell_proc(t_.child(c, b));
    for (int axis = 0; axis < t_.dim; ++axis) {
      const unsigned bit = 1u << axis;
      for (unsigned m = 0; m < kids_; ++m) {
        if (m & bit) continue;
        face_proc(t_.child(c, m), t_.child(c, m | bit), axis);
      }
    }
  }

  // a is below b along the axis and they share a face.
  void face_proc(int a, int b, int axis) {
    const bool la = t_.cell(a).leaf();
    const bool lb = t_.cell(b).leaf();
    if (la && lb) {
      out.emplace_back(std::min(a, b), std::max(a, b));
      return;
    }
    const unsigned bit = 1u << axis;
    for (unsigned m = 0; m < kids_; ++m) {
      if (m & bit) continue;
      face_proc(la ? a : t_.child(a, m | bit), lb ? b : t_.child(b, m), axis);
    }
  }

  std::vector<std::pair<int, int>> out;

 private:
  const SubdivisionTree& t_;
  unsigned kids_;
};

// Parameter range of origin + l*dir inside the closed box, intersected with
// [lo, hi] where given. Returns false if empty.
bool clip_line(const Point& origin, const std::vector<Scalar>& dir, const Aabb& box,
               std::optional<Scalar>& lo, std::optional<Scalar>& hi) {
  for (int k = 0; k < origin.dim(); ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const Scalar& d = dir[ks];
    if (sgn(d) == 0) {
      if (origin[k] < box.lo[ks] || origin[k] > box.hi[ks]) return false;
      continue;
    }
    Scalar a = (box.lo[ks] - origin[k]) / d;
    Scalar b = (box.hi[ks] - origin[k]) / d;
    if (a > b) std::swap(a, b);
    if (!lo || a > *lo) lo = a;
    if (!hi || b < *hi) hi = b;
  }
  return !(lo && hi && *lo > *hi);
}

Point along(const Point& origin, const std::vector<Scalar>& dir, const Scalar& l) {
  Point p = origin;
  for (int k = 0; k < p.dim(); ++k) p[k] += l * dir[static_cast<std::size_t>(k)];
  return p;
}

// Open segment (0,1) of a + l(b-a) meets the closed box.
bool open_segment_meets(const Point& a, const std::vector<Scalar>& dir, const Aabb& box) {
  std::optional<Scalar> lo = Scalar(0), hi = Scalar(1);
  if (!clip_line(a, dir, box, lo, hi)) return false;
  return *hi > 0 && *lo < 1;
}

bool open_segment_meets_site(const Point& a, const Point& b, const Site& s) {
  const int dim = a.dim();
  std::vector<Scalar> dir(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) dir[static_cast<std::size_t>(k)] = b[k] - a[k];
  if (!open_segment_meets(a, dir, s.bounds)) return false;
  if (dim == 2) return true;  // the site is its own bounding box

  const int k = s.hull.axis;
  const Scalar& c = s.hull.offset;
  const Scalar& dk = dir[static_cast<std::size_t>(k)];
  if (sgn(dk) != 0) {
    Scalar l = (c - a[k]) / dk;
    if (l <= 0 || l >= 1) return false;
    return s.contains_point(along(a, dir, l));
  }
  // In the facet plane: test against a rectangle cover of the facet.
  auto [u, v] = plane_axes(3, k);
  Point a2{a[u], a[v]};
  std::vector<Scalar> d2{dir[static_cast<std::size_t>(u)], dir[static_cast<std::size_t>(v)]};
  for (const auto& r : decompose(Polygon{s.facet}).rectangles) {
    if (open_segment_meets(a2, d2, r)) return true;
  }
  return false;
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<std::pair<int, int>> neighbor_pairs(const SubdivisionTree& tree) {
  FaceWalker w(tree);
  if (!tree.cells.empty()) w.cell_proc(0);
  return std::move(w.out);
}

bool segment_in_shape(const Point& a, const Point& b, const ShapeIndex& ctx) {
  const auto& shape = ctx.shape();
  if (!shape.contains(a) || !shape.contains(b)) return false;
  Aabb seg = Aabb::of_point(a);
  seg.expand(b);
  for (const auto& s : shape.sites) {
    if (!boxes_overlap(seg, s.bounds, false)) continue;
    if (open_segment_meets_site(a, b, s)) return false;
  }
  return true;
}

bool connectable(const VorNode& u, const VorNode& v, const ShapeIndex& ctx) {
  const bool uv = u.kind == NodeKind::Vertex;
  const bool vv = v.kind == NodeKind::Vertex;
  if (!uv && !vv) return u.labels == v.labels;
  if (uv != vv) return uv ? is_subset(v.labels, u.labels) : is_subset(u.labels, v.labels);
  std::vector<int> common;
  std::set_intersection(u.labels.begin(), u.labels.end(), v.labels.begin(), v.labels.end(),
                        std::back_inserter(common));
  return static_cast<int>(common.size()) >= ctx.dim() && segment_in_shape(u.position, v.position, ctx);
}

// ---------------------------------------------------------------------------
// Graph assembly

namespace {

class Builder {
 public:
  Builder(const SubdivisionTree& t, const ShapeIndex& ctx)
      : t_(t), ctx_(ctx), dim_(ctx.dim()) {
    for (const auto& s : ctx.shape().sites) all_.push_back(s.id);
    for (const auto& c : ctx.shape().corners) corners_.push_back(&c);
    std::sort(corners_.begin(), corners_.end(),
              [](const ShapeCorner* a, const ShapeCorner* b) { return a->position < b->position; });
    g_.dim = dim_;
  }

  VoronoiGraph run(ReconstructionStats& st) {
    for (int leaf : t_.leaves()) {
      const Cell& c = t_.cell(leaf);
      const std::size_t need = dim_ == 2 ? 2 : 3;
      if (c.active.size() < need || c.verdict == Verdict::T1) continue;
      if (dim_ == 2 && c.verdict == Verdict::T2) continue;
      st.leaves_processed++;
      process(leaf, st);
    }
    auto pairs = neighbor_pairs(t_);
    st.neighbor_pairs = pairs.size();
    for (const auto& [a, b] : pairs) {
      auto ia = leaf_nodes_.find(a);
      auto ib = leaf_nodes_.find(b);
      if (ia == leaf_nodes_.end() || ib == leaf_nodes_.end()) continue;
      for (int u : ia->second) {
        for (int v : ib->second) {
          if (u == v) continue;
          if (connectable(node(u), node(v), ctx_)) add_edge(u, v);
        }
      }
    }
    g_.edges.assign(edges_.begin(), edges_.end());
    count_leaf_corner_nodes(st);
    return std::move(g_);
  }

 private:
  const VorNode& node(int id) const { return g_.nodes[static_cast<std::size_t>(id)]; }

  void add_edge(int u, int v) { edges_.emplace(std::min(u, v), std::max(u, v)); }

  std::vector<const Site*> reps(const std::vector<int>& ids) const {
    std::vector<const Site*> out;
    for (int id : ids) out.push_back(&ctx_.site(id));
    return out;
  }

  // Labels are closure labels, so more than d of them mark a vertex even
  // when two share a hull and the equidistance system is underdetermined.
  NodeKind kind_of(const std::vector<int>& labels) const {
    if (static_cast<int>(labels.size()) > dim_) {
      auto sol = solve_equidistant(reps(labels), dim_);
      if (sol.consistent) return NodeKind::Vertex;
    }
    return dim_ == 2 ? NodeKind::Bisector : NodeKind::Skeleton;
  }

  int add_node(const Point& p, const std::vector<int>& labels, int leaf) {
    auto key = std::make_pair(p, labels);
    auto it = index_.find(key);
    int id;
    if (it != index_.end()) {
      id = it->second;
    } else {
      id = static_cast<int>(g_.nodes.size());
      VorNode n;
      n.id = id;
      n.kind = kind_of(labels);
      n.position = p;
      n.labels = labels;
      n.owner = leaf;
      g_.nodes.push_back(std::move(n));
      index_.emplace(std::move(key), id);
    }
    auto& list = leaf_nodes_[leaf];
    if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
    return id;
  }

  std::vector<const ShapeCorner*> corners_in(const AxisBox& box) const {
    std::vector<const ShapeCorner*> out;
    // Corners are sorted lexicographically, so x alone bounds the scan.
    auto it = std::lower_bound(corners_.begin(), corners_.end(), box.lo(0),
                               [](const ShapeCorner* c, const Scalar& x) { return c->position[0] < x; });
    for (; it != corners_.end() && (*it)->position[0] <= box.hi(0); ++it) {
      if (box.contains((*it)->position)) out.push_back(*it);
    }
    return out;
  }

  void process(int leaf, ReconstructionStats& st) {
    const Cell& c = t_.cell(leaf);
    const std::vector<int>& cand = c.parent < 0 ? all_ : t_.cell(c.parent).active;
    const std::vector<int>& frame = t_.frame(leaf);
    auto labels_at = [&](const Point& p) { return label_set(p, cand, frame, ctx_); };

    std::optional<Point> v = c.vertex;
    if (!v && static_cast<int>(hull_classes(c.active, ctx_)) > dim_) {
      v = class_vertex(c.box, c.active, ctx_);
    }
    if (v) {
      auto labels = labels_at(*v);
      if (static_cast<int>(labels.size()) > dim_ && kind_of(labels) == NodeKind::Vertex) {
        st.vertex_leaves++;
        const int vid = add_node(*v, labels, leaf);
        for (const ShapeCorner* k : corners_in(c.box)) {
          auto kl = labels_at(k->position);
          const int cid = add_node(k->position, kl, leaf);
          if (cid != vid && is_subset(kl, labels)) add_edge(cid, vid);
        }
        return;
      }
    }

    const auto box = c.box.to_aabb();
    std::vector<std::vector<int>> found;
    if (dim_ == 2) found = rim_vertices(c, labels_at, leaf, st);
    const auto cell_corners = corners_in(c.box);
    const std::size_t n = c.active.size();
    const auto d = static_cast<std::size_t>(dim_);
    std::vector<std::size_t> idx(d);
    // All d-subsets of the active set in lexicographic order.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t depth) {
      if (depth == d) {
        std::vector<int> subset;
        for (std::size_t i : idx) subset.push_back(c.active[i]);
        const bool covered = std::any_of(found.begin(), found.end(), [&](const auto& labels) {
          return is_subset(subset, labels);
        });
        if (!covered) place_subset(subset, box, cell_corners, labels_at, leaf, st);
        return;
      }
      for (std::size_t i = from; i + (d - depth) <= n; ++i) {
        idx[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  }

  struct Line {
    Point origin;
    std::vector<Scalar> dir;
    bool rim = false;
  };

  // Rims of the larger site's zone for a same-hull 2D pair.
  static std::array<Line, 2> rim_lines(const Site& s1, const Site& s2) {
    const Site& t = s1.id > s2.id ? s1 : s2;
    const int k = t.hull.axis;
    const int u = 1 - k;
    const auto ku = static_cast<std::size_t>(u);
    std::array<Line, 2> out;
    for (int i = 0; i < 2; ++i) {
      Line& l = out[static_cast<std::size_t>(i)];
      l.origin = Point(2);
      l.origin[k] = t.hull.offset;
      l.origin[u] = i == 0 ? t.bounds.lo[ku] : t.bounds.hi[ku];
      l.dir.assign(2, Scalar(0));
      l.dir[static_cast<std::size_t>(k)] = t.sigma;
      l.dir[ku] = i == 0 ? -1 : 1;
      l.rim = true;
    }
    return out;
  }

  // Vertices where a same-hull rim crosses another bisector or rim inside
  // the closed leaf. The equidistance system cannot find these. Returns
  // the label sets of the vertices placed.
  template <class LabelFn>
  std::vector<std::vector<int>> rim_vertices(const Cell& c, LabelFn& labels_at,
                                             int leaf, ReconstructionStats& st) {
    std::vector<Line> lines;
    bool any_rim = false;
    for (std::size_t i = 0; i < c.active.size(); ++i) {
      for (std::size_t j = i + 1; j < c.active.size(); ++j) {
        const Site& a = ctx_.site(c.active[i]);
        const Site& b = ctx_.site(c.active[j]);
        if (a.hull == b.hull) {
          for (auto& l : rim_lines(a, b)) lines.push_back(std::move(l));
          any_rim = true;
          continue;
        }
        auto sol = solve_equidistant({&a, &b}, 2);
        if (!sol.consistent || sol.free_dims != 1) continue;
        const auto& dir = sol.directions.front();
        lines.push_back(Line{sol.point, {dir[0], dir[1]}, false});
      }
    }
    std::vector<std::vector<int>> out;
    if (!any_rim) return out;
    std::set<Point> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const Line& l1 = lines[i];
        const Line& l2 = lines[j];
        if (!l1.rim && !l2.rim) continue;
        const Scalar det = l1.dir[0] * l2.dir[1] - l1.dir[1] * l2.dir[0];
        if (sgn(det) == 0) continue;
        const Scalar dx = l2.origin[0] - l1.origin[0];
        const Scalar dy = l2.origin[1] - l1.origin[1];
        Point p = along(l1.origin, l1.dir, (dx * l2.dir[1] - dy * l2.dir[0]) / det);
        if (!c.box.contains(p) || !seen.insert(p).second) continue;
        auto labels = labels_at(p);
        if (static_cast<int>(labels.size()) <= dim_ || kind_of(labels) != NodeKind::Vertex) continue;
        add_node(p, labels, leaf);
        st.rim_vertices++;
        out.push_back(std::move(labels));
      }
    }
    return out;
  }

  // Midpoint of the line's chord through the box, if D is finite for every
  // site at both chord ends.
  std::optional<Point> line_midpoint(const Point& origin, const std::vector<Scalar>& dir,
                                     const std::vector<const Site*>& sites, const Aabb& box,
                                     ReconstructionStats& st) {
    std::optional<Scalar> lo, hi;
    if (!clip_line(origin, dir, box, lo, hi) || !lo || !hi) return std::nullopt;
    Point e0 = along(origin, dir, *lo);
    Point e1 = along(origin, dir, *hi);
    auto valid = [&](const Point& p) {
      return std::all_of(sites.begin(), sites.end(),
                         [&](const Site* s) { return restricted_distance(p, *s, &ctx_).has_value(); });
    };
    const bool v0 = valid(e0);
    const bool v1 = valid(e1);
    if (v0 && v1) return midpoint(e0, e1);
    if (v0 != v1) st.one_sided_clips++;
    return std::nullopt;
  }

  // Two 2D sites on one line tie wherever both zones reach; the larger id
  // wins those points, so the pair is separated by the 45-degree rims of
  // its zone.
  template <class LabelFn>
  void place_rims(const std::vector<int>& subset, const std::vector<const Site*>& sites,
                  const Aabb& box, LabelFn& labels_at, int leaf, ReconstructionStats& st) {
    for (const Line& l : rim_lines(*sites[0], *sites[1])) {
      auto pos = line_midpoint(l.origin, l.dir, sites, box, st);
      if (!pos) continue;
      auto labels = labels_at(*pos);
      if (is_subset(subset, labels)) add_node(*pos, labels, leaf);
    }
  }

  template <class LabelFn>
  void place_subset(const std::vector<int>& subset, const Aabb& box,
                    const std::vector<const ShapeCorner*>& cell_corners, LabelFn& labels_at,
                    int leaf, ReconstructionStats& st) {
    auto sites = reps(subset);
    auto sol = solve_equidistant(sites, dim_);
    if (dim_ == 2 && subset.size() == 2 && sites[0]->hull == sites[1]->hull) {
      place_rims(subset, sites, box, labels_at, leaf, st);
      return;
    }
    if (!sol.consistent || sol.free_dims != 1) return;

    std::optional<Point> pos;
    for (const ShapeCorner* k : cell_corners) {
      if (k->sites == subset) {
        pos = k->position;
        break;
      }
    }
    if (!pos) pos = line_midpoint(sol.point, sol.directions.front(), sites, box, st);
    if (!pos) return;
    auto labels = labels_at(*pos);
    if (!is_subset(subset, labels)) return;
    add_node(*pos, labels, leaf);
  }

  void count_leaf_corner_nodes(ReconstructionStats& st) const {
    std::set<Point> leaf_corners;
    for (int leaf : t_.leaves()) {
      for (unsigned b = 0; b < (1u << dim_); ++b) leaf_corners.insert(t_.cell(leaf).box.corner(b));
    }
    for (const auto& n : g_.nodes) {
      if (ctx_.shape().corner_at(n.position)) continue;
      if (leaf_corners.count(n.position)) st.nodes_on_leaf_corners++;
    }
  }

  const SubdivisionTree& t_;
  const ShapeIndex& ctx_;
  int dim_;
  std::vector<int> all_;
  std::vector<const ShapeCorner*> corners_;
  VoronoiGraph g_;
  std::map<std::pair<Point, std::vector<int>>, int> index_;
  std::map<int, std::vector<int>> leaf_nodes_;
  std::set<std::pair<int, int>> edges_;
};

}  // namespace

VoronoiGraph build_graph(const SubdivisionTree& tree, const ShapeIndex& ctx,
                         ReconstructionStats* stats) {
  ReconstructionStats local;
  ReconstructionStats& st = stats ? *stats : local;
  st = ReconstructionStats{};
  return Builder(tree, ctx).run(st);
}

VoronoiGraph contract(const VoronoiGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::set<int>> adj(n);
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  }
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || g.nodes[i].kind == NodeKind::Vertex || adj[i].size() != 2) continue;
      const int x = *adj[i].begin();
      const int y = *adj[i].rbegin();
      const int self = static_cast<int>(i);
      adj[static_cast<std::size_t>(x)].erase(self);
      adj[static_cast<std::size_t>(y)].erase(self);
      adj[static_cast<std::size_t>(x)].insert(y);
      adj[static_cast<std::size_t>(y)].insert(x);
      adj[i].clear();
      alive[i] = false;
      changed = true;
    }
  }
  VoronoiGraph out;
  out.dim = g.dim;
  std::vector<int> remap(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    remap[i] = static_cast<int>(out.nodes.size());
    VorNode node = g.nodes[i];
    node.id = remap[i];
    out.nodes.push_back(std::move(node));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : adj[i]) {
      if (static_cast<int>(i) < j) out.edges.emplace_back(remap[i], remap[static_cast<std::size_t>(j)]);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace linfvd
