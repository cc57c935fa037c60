// SPDX-License-Identifier: Apache-2.0
#include "linfvd/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace linfvd {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Drops repeated points and collinear middle vertices of a closed cycle.
Cycle simplify(const Cycle& in) {
  Cycle c;
  for (const auto& p : in) {
    if (c.empty() || !(c.back() == p)) c.push_back(p);
  }
  while (c.size() > 1 && c.front() == c.back()) c.pop_back();
  bool changed = true;
  while (changed && c.size() > 2) {
    changed = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Point& a = c[(i + c.size() - 1) % c.size()];
      const Point& b = c[i];
      const Point& d = c[(i + 1) % c.size()];
      if ((a[0] == b[0] && b[0] == d[0]) || (a[1] == b[1] && b[1] == d[1])) {
        c.erase(c.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return c;
}

OrthogonalShape generate_2d(const GenSpec& spec) {
  if (spec.grid < 2) throw Error(ErrorCode::InfeasibleSpec, "grid must be at least 2");
  if (spec.holes < 0) throw Error(ErrorCode::InfeasibleSpec, "negative hole count");
  const int outer_budget = spec.sites - 4 * spec.holes;
  if (outer_budget < 4) {
    throw Error(ErrorCode::InfeasibleSpec, "site target too small for the requested holes");
  }
  Rng rng(spec.seed);
  const int g = spec.grid;
  // Every step in the top or bottom profile adds two edges to the base four.
  const int steps = static_cast<int>(std::lround((outer_budget - 4) / 2.0));
  const int top_steps = (steps + 1) / 2;
  const int bottom_steps = steps - top_steps;
  const int m = top_steps + 1;

  std::vector<int> xs{0};
  for (int i = 0; i < m; ++i) xs.push_back(xs.back() + uniform(rng, 1, g));
  // Leave room for at least one hole slot.
  if (spec.holes > 0 && xs.back() < g + 2) {
    const int extra = g + 2 - xs.back();
    for (std::size_t i = 1; i < xs.size(); ++i) xs[i] += extra;
  }
  const int width = xs.back();
  const int cols = spec.holes > 0 ? (width - 2 - g) / (g + 1) + 1 : 1;
  const int rows = spec.holes > 0 ? (spec.holes + cols - 1) / cols : 0;
  const int top_base = g + 1 + rows * (g + 1);

  std::vector<int> bottom(static_cast<std::size_t>(m)), top(static_cast<std::size_t>(m));
  std::vector<int> boundaries(static_cast<std::size_t>(m - 1));
  std::iota(boundaries.begin(), boundaries.end(), 1);
  std::shuffle(boundaries.begin(), boundaries.end(), rng);
  std::set<int> bottom_changes(boundaries.begin(), boundaries.begin() + bottom_steps);
  for (int i = 0; i < m; ++i) {
    const auto is = static_cast<std::size_t>(i);
    int t;
    do t = top_base + uniform(rng, 0, g - 1);
    while (i > 0 && t == top[is - 1]);
    top[is] = t;
    if (i == 0) {
      bottom[is] = uniform(rng, 0, g - 1);
    } else if (bottom_changes.count(i)) {
      int b;
      do b = uniform(rng, 0, g - 1);
      while (b == bottom[is - 1]);
      bottom[is] = b;
    } else {
      bottom[is] = bottom[is - 1];
    }
  }

  Cycle outer;
  for (int i = 0; i < m; ++i) {
    const auto is = static_cast<std::size_t>(i);
    outer.push_back(Point{xs[is], bottom[is]});
    outer.push_back(Point{xs[is + 1], bottom[is]});
  }
  for (int i = m - 1; i >= 0; --i) {
    const auto is = static_cast<std::size_t>(i);
    outer.push_back(Point{xs[is + 1], top[is]});
    outer.push_back(Point{xs[is], top[is]});
  }

  std::vector<int> slots(static_cast<std::size_t>(cols * rows));
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<Cycle> holes;
  for (int h = 0; h < spec.holes; ++h) {
    const int slot = slots[static_cast<std::size_t>(h)];
    const int sx = 1 + (slot % cols) * (g + 1);
    const int sy = g + 1 + (slot / cols) * (g + 1);
    const int w = uniform(rng, 1, g);
    const int ht = uniform(rng, 1, g);
    const int ox = uniform(rng, 0, g - w);
    const int oy = uniform(rng, 0, g - ht);
    const int x0 = sx + ox, y0 = sy + oy;
    holes.push_back(Cycle{Point{x0, y0}, Point{x0 + w, y0}, Point{x0 + w, y0 + ht}, Point{x0, y0 + ht}});
  }
  return build_shape_2d(simplify(outer), std::move(holes));
}

using Voxels = std::vector<std::vector<std::vector<bool>>>;

Voxels heightfield(const std::vector<std::vector<int>>& h, int zmax) {
  Voxels v(h.size(), std::vector<std::vector<bool>>(h[0].size(), std::vector<bool>(static_cast<std::size_t>(zmax), false)));
  for (std::size_t x = 0; x < h.size(); ++x)
    for (std::size_t y = 0; y < h[x].size(); ++y)
      for (int z = 0; z < h[x][y]; ++z) v[x][y][static_cast<std::size_t>(z)] = true;
  return v;
}

OrthogonalShape generate_3d(const GenSpec& spec) {
  if (spec.sites < 6) throw Error(ErrorCode::InfeasibleSpec, "a polyhedron needs at least 6 facets");
  if (spec.holes != 0) throw Error(ErrorCode::InfeasibleSpec, "3D generation does not place holes");
  if (spec.grid < 1) throw Error(ErrorCode::InfeasibleSpec, "grid must be positive");
  Rng rng(spec.seed);
  const int lo = static_cast<int>(std::ceil(spec.sites * 0.8));
  const int hi = static_cast<int>(std::floor(spec.sites * 1.2));
  const int n = std::max(4, static_cast<int>(std::ceil(std::sqrt(spec.sites))));
  const int zmax = 1 + spec.grid;

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::vector<int>> h(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
    if (lo <= 6) {
      std::vector<FacetSpec> slab;
      voxel_facets(heightfield(h, zmax), slab);
      return build_shape_3d(slab);
    }
    for (int step = 0; step < 50 * n; ++step) {
      auto trial = h;
      const int x0 = uniform(rng, 0, n - 1), x1 = uniform(rng, x0, n - 1);
      const int y0 = uniform(rng, 0, n - 1), y1 = uniform(rng, y0, n - 1);
      const int top = uniform(rng, 2, zmax);
      for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y) {
          auto& cell = trial[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
          cell = std::max(cell, top);
        }
      std::vector<FacetSpec> facets;
      if (!voxel_facets(heightfield(trial, zmax), facets)) continue;
      const int count = static_cast<int>(facets.size());
      if (count > hi) break;
      OrthogonalShape shape;
      try {
        shape = build_shape_3d(facets);
      } catch (const Error&) {
        continue;
      }
      h = std::move(trial);
      if (count >= lo) return shape;
    }
  }
  throw Error(ErrorCode::InfeasibleSpec, "no polyhedron near the requested facet count");
}

struct PlaneKey {
  int axis;
  int offset;
  int sign;
  bool operator<(const PlaneKey& o) const {
    return std::tie(axis, offset, sign) < std::tie(o.axis, o.offset, o.sign);
  }
};

}  // namespace

bool voxel_facets(const Voxels& occ, std::vector<FacetSpec>& out) {
  out.clear();
  const int dims[3] = {static_cast<int>(occ.size()), static_cast<int>(occ[0].size()),
                       static_cast<int>(occ[0][0].size())};
  auto at = [&](int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0 || x >= dims[0] || y >= dims[1] || z >= dims[2]) return false;
    return static_cast<bool>(occ[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)][static_cast<std::size_t>(z)]);
  };
  // Unit squares of the boundary grouped by plane, in-plane lower corners.
  std::map<PlaneKey, std::set<std::pair<int, int>>> faces;
  for (int x = 0; x < dims[0]; ++x)
    for (int y = 0; y < dims[1]; ++y)
      for (int z = 0; z < dims[2]; ++z) {
        if (!at(x, y, z)) continue;
        const int c[3] = {x, y, z};
        for (int axis = 0; axis < 3; ++axis) {
          auto [u, v] = plane_axes(3, axis);
          for (int dir : {-1, 1}) {
            int n[3] = {x, y, z};
            n[axis] += dir;
            if (at(n[0], n[1], n[2])) continue;
            PlaneKey key{axis, c[axis] + (dir > 0 ? 1 : 0), -dir};
            faces[key].insert({c[u], c[v]});
          }
        }
      }

  for (const auto& [key, squares] : faces) {
    std::set<std::pair<int, int>> left = squares;
    while (!left.empty()) {
      // Flood one edge-connected component.
      std::set<std::pair<int, int>> comp;
      std::vector<std::pair<int, int>> stack{*left.begin()};
      left.erase(left.begin());
      while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        comp.insert(s);
        for (auto d : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
          std::pair<int, int> nb{s.first + d.first, s.second + d.second};
          auto it = left.find(nb);
          if (it != left.end()) {
            left.erase(it);
            stack.push_back(nb);
          }
        }
      }
      // Boundary edges, CCW per square, with shared edges cancelled.
      std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> next;
      std::size_t edge_count = 0;
      for (auto [a, b] : comp) {
        const std::pair<int, int> p[4] = {{a, b}, {a + 1, b}, {a + 1, b + 1}, {a, b + 1}};
        const std::pair<int, int> nb[4] = {{a, b - 1}, {a + 1, b}, {a, b + 1}, {a - 1, b}};
        for (int e = 0; e < 4; ++e) {
          if (comp.count(nb[e])) continue;
          next[p[e]].push_back(p[(e + 1) % 4]);
          ++edge_count;
        }
      }
      for (const auto& [v, outs] : next) {
        if (outs.size() != 1) return false;  // pinch vertex
      }
      Cycle cycle;
      auto start = next.begin()->first;
      auto cur = start;
      std::size_t walked = 0;
      do {
        cycle.push_back(Point{cur.first, cur.second});
        cur = next[cur].front();
        ++walked;
      } while (cur != start && walked <= edge_count);
      if (walked != edge_count) return false;  // more than one loop: a hole
      out.push_back(FacetSpec{key.axis, Scalar(key.offset), simplify(cycle), key.sign});
    }
  }
  return true;
}

OrthogonalShape generate(const GenSpec& spec) {
  if (spec.dim == 2) return generate_2d(spec);
  if (spec.dim == 3) return generate_3d(spec);
  throw Error(ErrorCode::InfeasibleSpec, "dimension must be 2 or 3");
}

}  // namespace linfvd
