// SPDX-License-Identifier: Apache-2.0
#include "linfvd/verification.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace linfvd {

Oracle::Oracle(const OrthogonalShape& shape) : shape_(&shape), ctx_(shape, BvhMode::Off) {}

std::vector<int> Oracle::brute_nearest(const Point& p, Scalar* distance) const {
  if (shape_->locate(p) == Containment::Outside) return {};
  std::optional<Scalar> best;
  std::vector<int> arg;
  for (const auto& s : shape_->sites) {
    auto d = restricted_distance(p, s, &ctx_);
    if (!d) continue;
    if (!best || *d < *best) {
      best = d;
      arg.assign(1, s.id);
    } else if (*d == *best) {
      arg.push_back(s.id);
    }
  }
  if (distance && best) *distance = *best;
  return closure_labels(p, arg, ctx_);
}

namespace {

std::vector<Point> lattice(const AxisBox& box, int n) {
  const int dim = box.dim();
  const Scalar step = box.radius * 2 / (n - 1);
  std::vector<Point> out;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  while (true) {
    Point p(dim);
    for (int k = 0; k < dim; ++k) p[k] = box.lo(k) + step * idx[static_cast<std::size_t>(k)];
    out.push_back(p);
    int k = 0;
    while (k < dim && ++idx[static_cast<std::size_t>(k)] == n) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == dim) break;
  }
  return out;
}

long floor_long(const Scalar& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

long ceil_long(const Scalar& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

std::string describe(const Point& p, const std::vector<int>& labels) {
  std::ostringstream os;
  os << p << " labels {";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << "}";
  return os.str();
}

std::vector<int> common_labels(const VorNode& a, const VorNode& b) {
  std::vector<int> out;
  std::set_intersection(a.labels.begin(), a.labels.end(), b.labels.begin(), b.labels.end(),
                        std::back_inserter(out));
  return out;
}

// Equidistant to all labels and no site strictly closer; empty string if so.
std::string check_point(const Point& p, const std::vector<int>& labels, const Oracle& oracle) {
  if (labels.empty()) return "no labels";
  const auto& ctx = oracle.index();
  if (!ctx.shape().contains(p)) return "outside the shape";
  std::optional<Scalar> d;
  for (int s : labels) {
    auto ds = restricted_distance(p, ctx.site(s), &ctx);
    if (!ds) return "label " + std::to_string(s) + " has infinite distance";
    if (d && *ds != *d) return "labels not equidistant";
    d = ds;
  }
  for (const auto& s : ctx.shape().sites) {
    auto ds = restricted_distance(p, s, &ctx);
    if (ds && *ds < *d) return "site " + std::to_string(s.id) + " is closer";
  }
  return {};
}

}  // namespace

GridSample sample_grid(const Oracle& oracle, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "grid resolution must be at least 2");
  GridSample g;
  g.k = k;
  g.box = oracle.index().shape().root_box();
  g.points = lattice(g.box, k + 1);
  g.labels.reserve(g.points.size());
  for (const auto& p : g.points) g.labels.push_back(oracle.brute_nearest(p));
  return g;
}

std::vector<int> naive_box_scan(const RectDecomposition& dec, const Aabb& q, bool strict) {
  std::vector<int> out;
  for (std::size_t i = 0; i < dec.rectangles.size(); ++i) {
    if (boxes_overlap(dec.rectangles[i], q, strict)) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  const int dim = p.dim();
  for (int k = 0; k < dim; ++k) {
    if (p[k] < min(a[k], b[k]) || p[k] > max(a[k], b[k])) return false;
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      if ((p[i] - a[i]) * (b[j] - a[j]) != (p[j] - a[j]) * (b[i] - a[i])) return false;
    }
  }
  return true;
}

Certificate certify(const VoronoiGraph& g, const Oracle& oracle) {
  Certificate c;
  for (const auto& n : g.nodes) {
    c.nodes_checked++;
    auto why = check_point(n.position, n.labels, oracle);
    if (!why.empty()) c.violations.push_back("node " + describe(n.position, n.labels) + ": " + why);
  }
  for (const auto& [a, b] : g.edges) {
    c.edges_checked++;
    const auto& u = g.nodes[static_cast<std::size_t>(a)];
    const auto& v = g.nodes[static_cast<std::size_t>(b)];
    auto shared = common_labels(u, v);
    Point m = midpoint(u.position, v.position);
    auto why = check_point(m, shared, oracle);
    if (!why.empty()) c.violations.push_back("edge midpoint " + describe(m, shared) + ": " + why);
  }
  return c;
}

GridCheck grid_check(const VoronoiGraph& g, const Oracle& oracle, int k) {
  GridCheck out;
  const AxisBox box = oracle.index().shape().root_box();
  const int dim = box.dim();
  const Scalar h = box.radius * 2 / k;
  // Label sets of graph features through each lattice point.
  std::map<std::vector<long>, std::vector<std::vector<int>>> covered;
  auto index_range = [&](const Scalar& lo, const Scalar& hi, int axis) {
    long a = std::max(0L, ceil_long((lo - box.lo(axis)) / h));
    long b = std::min(static_cast<long>(k), floor_long((hi - box.lo(axis)) / h));
    return std::make_pair(a, b);
  };
  auto visit = [&](const Point& a, const Point& b, const std::vector<int>& labels) {
    std::vector<std::pair<long, long>> ranges;
    for (int ax = 0; ax < dim; ++ax) {
      ranges.push_back(index_range(min(a[ax], b[ax]), max(a[ax], b[ax]), ax));
      if (ranges.back().first > ranges.back().second) return;
    }
    std::vector<long> idx(static_cast<std::size_t>(dim));
    for (int ax = 0; ax < dim; ++ax) idx[static_cast<std::size_t>(ax)] = ranges[static_cast<std::size_t>(ax)].first;
    while (true) {
      Point p(dim);
      for (int ax = 0; ax < dim; ++ax) p[ax] = box.lo(ax) + h * Scalar(idx[static_cast<std::size_t>(ax)]);
      if (on_segment(p, a, b)) covered[idx].push_back(labels);
      int ax = 0;
      while (ax < dim) {
        auto& i = idx[static_cast<std::size_t>(ax)];
        if (++i <= ranges[static_cast<std::size_t>(ax)].second) break;
        i = ranges[static_cast<std::size_t>(ax)].first;
        ++ax;
      }
      if (ax == dim) break;
    }
  };
  for (const auto& n : g.nodes) visit(n.position, n.position, n.labels);
  for (const auto& [a, b] : g.edges) {
    const auto& u = g.nodes[static_cast<std::size_t>(a)];
    const auto& v = g.nodes[static_cast<std::size_t>(b)];
    visit(u.position, v.position, common_labels(u, v));
  }

  std::vector<long> idx(static_cast<std::size_t>(dim), 0);
  while (true) {
    Point p(dim);
    for (int ax = 0; ax < dim; ++ax) p[ax] = box.lo(ax) + h * Scalar(idx[static_cast<std::size_t>(ax)]);
    auto labels = oracle.brute_nearest(p);
    out.samples++;
    auto it = covered.find(idx);
    if (labels.size() >= 2) {
      out.multi_label++;
      bool ok = false;
      if (it != covered.end()) {
        for (const auto& l : it->second) {
          if (std::includes(l.begin(), l.end(), labels.begin(), labels.end())) ok = true;
        }
      }
      if (!ok) out.violations.push_back("tie sample off the graph: " + describe(p, labels));
    } else if (labels.size() == 1 && it != covered.end()) {
      out.violations.push_back("single-label sample on the graph: " + describe(p, labels));
    }
    int ax = 0;
    while (ax < dim && ++idx[static_cast<std::size_t>(ax)] > k) idx[static_cast<std::size_t>(ax++)] = 0;
    if (ax == dim) break;
  }
  return out;
}

std::vector<int> region_incidence(const AxisBox& box, const Oracle& oracle, int n) {
  std::vector<int> out;
  for (const auto& p : lattice(box, n)) {
    auto l = oracle.brute_nearest(p);
    out.insert(out.end(), l.begin(), l.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace linfvd
