// SPDX-License-Identifier: Apache-2.0
#include "linfvd/subdivision.hpp"

#include <algorithm>

namespace linfvd {

const char* verdict_name(Verdict v, int dim) {
  if (dim == 3) {
    switch (v) {
      case Verdict::T1: return "T1'";
      case Verdict::T2: return "T2'";
      case Verdict::T3: return "T3'";
      default: break;
    }
  }
  switch (v) {
    case Verdict::Subdivided: return "subdivided";
    case Verdict::T1: return "T1";
    case Verdict::T2: return "T2";
    case Verdict::T3: return "T3";
    case Verdict::T4: return "T4";
    case Verdict::DepthLimit: return "depth_limit";
  }
  return "?";
}

std::vector<int> SubdivisionTree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].leaf()) out.push_back(static_cast<int>(i));
  }
  return out;
}

const std::vector<int>& SubdivisionTree::frame(int i) const {
  while (cells[static_cast<std::size_t>(i)].touching.empty() && cell(i).parent >= 0) {
    i = cell(i).parent;
  }
  return cell(i).touching;
}

std::vector<int> label_set(const Point& p, const std::vector<int>& candidates,
                           const std::vector<int>& frame, const ShapeIndex& ctx) {
  if (!location_test(p, frame, ctx)) return {};
  return nearest_sites(p, candidates, ctx);
}

std::size_t hull_classes(const std::vector<int>& sites, const ShapeIndex& ctx) {
  std::vector<std::pair<int, Scalar>> hulls;
  for (int id : sites) {
    const auto& h = ctx.site(id).hull;
    hulls.emplace_back(h.axis, h.offset);
  }
  std::sort(hulls.begin(), hulls.end());
  return static_cast<std::size_t>(std::unique(hulls.begin(), hulls.end()) - hulls.begin());
}

std::optional<Point> class_vertex(const AxisBox& box, const std::vector<int>& sites,
                                  const ShapeIndex& ctx) {
  std::map<std::pair<int, Scalar>, std::vector<int>> classes;
  for (int id : sites) {
    const auto& h = ctx.site(id).hull;
    classes[{h.axis, h.offset}].push_back(id);
  }
  std::vector<const Site*> reps;
  for (const auto& [key, ids] : classes) reps.push_back(&ctx.site(ids.front()));
  auto sol = solve_equidistant(reps, box.dim());
  if (!sol.consistent || sol.free_dims != 0 || !box.contains(sol.point)) return std::nullopt;
  for (const auto& [key, ids] : classes) {
    bool ok = std::any_of(ids.begin(), ids.end(), [&](int id) {
      return restricted_distance(sol.point, ctx.site(id), &ctx).has_value();
    });
    if (!ok) return std::nullopt;
  }
  return sol.point;
}

namespace {

class Driver {
 public:
  Driver(const ShapeIndex& ctx, const SubdivisionLimits& limits)
      : ctx_(ctx), limits_(limits), dim_(ctx.dim()) {}

  SubdivisionTree run() {
    tree_.dim = dim_;
    Cell root;
    root.box = ctx_.shape().root_box();
    for (const auto& s : ctx_.shape().sites) all_.push_back(s.id);
    root.touching = all_;
    tree_.cells.push_back(std::move(root));
    for (std::size_t head = 0; head < tree_.cells.size(); ++head) process(static_cast<int>(head));

    auto& st = tree_.stats;
    st.cells = tree_.cells.size();
    bool first = true;
    for (const auto& c : tree_.cells) {
      st.max_depth = std::max(st.max_depth, c.depth);
      if (!c.leaf()) continue;
      st.leaves[c.verdict]++;
      Scalar edge = c.box.radius * 2;
      if (first || edge < st.min_leaf_edge) st.min_leaf_edge = edge;
      first = false;
    }
    return std::move(tree_);
  }

 private:
  void process(int idx) {
    const auto i = static_cast<std::size_t>(idx);
    const int parent = tree_.cells[i].parent;
    const std::vector<int>& parent_active =
        parent < 0 ? all_ : tree_.cells[static_cast<std::size_t>(parent)].active;
    const AxisBox box = tree_.cells[i].box;
    const int depth = tree_.cells[i].depth;

    if (parent >= 0) {
      std::vector<int> touching;
      for (int s : tree_.cells[static_cast<std::size_t>(parent)].touching) {
        if (is_intersecting(ctx_.site(s), box, false, &ctx_)) touching.push_back(s);
      }
      tree_.cells[i].touching = std::move(touching);
    }
    // Frame: own touching list, else the nearest ancestor's.
    const std::vector<int>& frame = tree_.frame(idx);

    Cell& c = tree_.cells[i];
    c.center_inside = location_test(box.center, frame, ctx_);
    if (c.center_inside) {
      Scalar d;
      c.center_label = nearest_sites(box.center, parent_active, ctx_, &d);
      if (c.center_label.empty()) {
        throw Error(ErrorCode::InternalInconsistency,
                    "cell center inside the shape has no finite restricted distance");
      }
      c.delta = d;
    } else {
      c.delta = 0;
    }

    AxisBox probe(box.center, box.radius * 2 + c.delta);
    std::vector<int> candidates;
    if (ctx_.use_candidate_bvh(parent_active.size())) {
      auto near = ctx_.sites_near(probe.to_aabb());
      std::set_intersection(parent_active.begin(), parent_active.end(), near.begin(), near.end(),
                            std::back_inserter(candidates));
    } else {
      candidates = parent_active;
    }
    for (int s : candidates) {
      const Site& site = ctx_.site(s);
      if (oriented_zone_in_cell(site, box, &ctx_) && is_intersecting(site, probe, false, &ctx_)) {
        c.active.push_back(s);
      }
    }
    auto& per_level = tree_.stats.active_per_level;
    if (per_level.size() <= static_cast<std::size_t>(depth)) per_level.resize(static_cast<std::size_t>(depth) + 1, 0);
    per_level[static_cast<std::size_t>(depth)] += c.active.size();

    c.verdict = classify(c, parent_active, frame);
    if (c.verdict != Verdict::Subdivided) return;
    const unsigned kids = 1u << dim_;
    if (depth >= limits_.max_depth || tree_.cells.size() + kids > limits_.max_cells) {
      c.verdict = Verdict::DepthLimit;
      tree_.stats.depth_limit_hits++;
      return;
    }
    c.first_child = static_cast<int>(tree_.cells.size());
    for (unsigned b = 0; b < kids; ++b) {
      Cell k;
      k.box = box.child(b);
      k.depth = depth + 1;
      k.parent = idx;
      tree_.cells.push_back(std::move(k));
    }
  }

  Verdict classify(Cell& c, const std::vector<int>& parent_active, const std::vector<int>& frame) {
    auto crossed = [&] {
      return std::any_of(c.active.begin(), c.active.end(), [&](int s) {
        return is_intersecting(ctx_.site(s), c.box, true, &ctx_);
      });
    };
    const std::size_t classes = hull_classes(c.active, ctx_);
    if (dim_ == 2) {
      c.corner_labels.resize(4);
      for (unsigned b = 0; b < 4; ++b) {
        Point pt = c.box.corner(b);
        auto it = corner_memo_.find(pt);
        if (it == corner_memo_.end()) {
          it = corner_memo_.emplace(pt, label_set(pt, parent_active, frame, ctx_)).first;
        }
        c.corner_labels[b] = it->second;
      }
      const auto& l0 = c.corner_labels[0];
      bool same = l0.size() == 1;
      for (unsigned b = 1; b < 4 && same; ++b) same = c.corner_labels[b] == l0;
      if (same) return Verdict::T1;
      if (c.center_label.empty() && !crossed()) return Verdict::T2;
      if (classes <= 3) return Verdict::T3;
      if (classes <= 8) {
        c.vertex = class_vertex(c.box, c.active, ctx_);
        if (c.vertex) return Verdict::T4;
      }
      return Verdict::Subdivided;
    }
    if (c.center_label.empty() && !crossed()) return Verdict::T1;
    if (classes <= 4) return Verdict::T2;
    if (classes <= 24) {
      c.vertex = class_vertex(c.box, c.active, ctx_);
      if (c.vertex) return Verdict::T3;
    }
    return Verdict::Subdivided;
  }

  const ShapeIndex& ctx_;
  SubdivisionLimits limits_;
  int dim_;
  SubdivisionTree tree_;
  std::vector<int> all_;
  std::map<Point, std::vector<int>> corner_memo_;
};

}  // namespace

SubdivisionTree subdivide(const ShapeIndex& ctx, const SubdivisionLimits& limits) {
  return Driver(ctx, limits).run();
}

}  // namespace linfvd
