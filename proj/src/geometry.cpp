// SPDX-License-Identifier: Apache-2.0
#include "linfvd/geometry.hpp"

#include <cctype>

namespace linfvd {

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' ||
      den[0] == '+') {
    throw Error(ErrorCode::MalformedDocument,
                "not a rational number: \"" + std::string(text) + "\"");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) {
    throw Error(ErrorCode::MalformedDocument,
                "zero denominator: \"" + std::string(text) + "\"");
  }
  Scalar q(zn, zd);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(10); }

Scalar ratio(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

int sign(const Scalar& x) { return sgn(x); }

Scalar abs(const Scalar& x) { return sgn(x) < 0 ? Scalar(-x) : x; }

const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Point::Point(int dim) : dim_(dim) {
  if (dim < 1 || dim > 3) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension must be 1..3");
  }
}

Point::Point(std::initializer_list<Scalar> coords)
    : dim_(static_cast<int>(coords.size())) {
  if (dim_ < 1 || dim_ > 3) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension must be 1..3");
  }
  std::size_t i = 0;
  for (const auto& c : coords) x_[i++] = c;
}

bool operator==(const Point& a, const Point& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool operator<(const Point& a, const Point& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  for (int i = 0; i < a.dim_; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (int i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << to_string(p[i]);
  }
  return os << ')';
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "points of dimension " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
}

Point midpoint(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Point m(a.dim());
  for (int i = 0; i < a.dim(); ++i) m[i] = (a[i] + b[i]) / 2;
  return m;
}

Aabb Aabb::of_point(const Point& p) {
  Aabb b;
  b.dim = p.dim();
  for (int i = 0; i < p.dim(); ++i) {
    b.lo[static_cast<std::size_t>(i)] = p[i];
    b.hi[static_cast<std::size_t>(i)] = p[i];
  }
  return b;
}

void Aabb::expand(const Point& p) {
  for (int i = 0; i < dim; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (p[i] < lo[k]) lo[k] = p[i];
    if (p[i] > hi[k]) hi[k] = p[i];
  }
}

void Aabb::expand(const Aabb& b) {
  for (std::size_t k = 0; k < static_cast<std::size_t>(dim); ++k) {
    if (b.lo[k] < lo[k]) lo[k] = b.lo[k];
    if (b.hi[k] > hi[k]) hi[k] = b.hi[k];
  }
}

Point Aabb::min_corner() const {
  Point p(dim);
  for (int i = 0; i < dim; ++i) p[i] = lo[static_cast<std::size_t>(i)];
  return p;
}

Point Aabb::max_corner() const {
  Point p(dim);
  for (int i = 0; i < dim; ++i) p[i] = hi[static_cast<std::size_t>(i)];
  return p;
}

bool Aabb::contains(const Point& p) const {
  if (p.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "box/point");
  for (int i = 0; i < dim; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (p[i] < lo[k] || p[i] > hi[k]) return false;
  }
  return true;
}

Scalar Aabb::volume() const {
  Scalar v = 1;
  for (std::size_t k = 0; k < static_cast<std::size_t>(dim); ++k) v *= hi[k] - lo[k];
  return v;
}

bool operator==(const Aabb& a, const Aabb& b) {
  if (a.dim != b.dim) return false;
  for (std::size_t k = 0; k < static_cast<std::size_t>(a.dim); ++k) {
    if (a.lo[k] != b.lo[k] || a.hi[k] != b.hi[k]) return false;
  }
  return true;
}

AxisBox::AxisBox(Point c, Scalar r) : center(std::move(c)), radius(std::move(r)) {
  if (sgn(radius) < 0) throw Error(ErrorCode::InvalidArgument, "negative box radius");
}

Aabb AxisBox::to_aabb() const {
  Aabb b;
  b.dim = dim();
  for (int i = 0; i < dim(); ++i) {
    b.lo[static_cast<std::size_t>(i)] = lo(i);
    b.hi[static_cast<std::size_t>(i)] = hi(i);
  }
  return b;
}

AxisBox AxisBox::from_aabb(const Aabb& b) {
  Point c(b.dim);
  Scalar r = (b.hi[0] - b.lo[0]) / 2;
  for (int i = 0; i < b.dim; ++i) {
    auto k = static_cast<std::size_t>(i);
    if ((b.hi[k] - b.lo[k]) / 2 != r) {
      throw Error(ErrorCode::InvalidArgument, "box is not a square/cube");
    }
    c[i] = (b.lo[k] + b.hi[k]) / 2;
  }
  return AxisBox(c, r);
}

bool AxisBox::contains(const Point& p) const {
  if (p.dim() != dim()) throw Error(ErrorCode::DimensionMismatch, "box/point");
  for (int i = 0; i < dim(); ++i) {
    if (abs(p[i] - center[i]) > radius) return false;
  }
  return true;
}

Point AxisBox::corner(unsigned bits) const {
  Point p(dim());
  for (int i = 0; i < dim(); ++i) {
    p[i] = ((bits >> i) & 1u) ? hi(i) : lo(i);
  }
  return p;
}

AxisBox AxisBox::child(unsigned bits) const {
  Scalar half = radius / 2;
  Point c(dim());
  for (int i = 0; i < dim(); ++i) {
    c[i] = (bits >> i) & 1u ? Scalar(center[i] + half) : Scalar(center[i] - half);
  }
  return AxisBox(c, half);
}

Scalar linf_distance(const Point& p, const Point& q) {
  require_same_dim(p, q);
  Scalar d = 0;
  for (int i = 0; i < p.dim(); ++i) {
    Scalar di = abs(p[i] - q[i]);
    if (di > d) d = di;
  }
  return d;
}

Scalar linf_distance_to_box(const Point& p, const Aabb& b) {
  if (p.dim() != b.dim) throw Error(ErrorCode::DimensionMismatch, "box/point");
  Scalar d = 0;
  for (int i = 0; i < p.dim(); ++i) {
    auto k = static_cast<std::size_t>(i);
    Scalar di = 0;
    if (p[i] < b.lo[k]) di = b.lo[k] - p[i];
    else if (p[i] > b.hi[k]) di = p[i] - b.hi[k];
    if (di > d) d = di;
  }
  return d;
}

Scalar linf_distance_to_box(const Point& p, const AxisBox& b) {
  require_same_dim(p, b.center);
  return linf_distance_to_box(p, b.to_aabb());
}

Scalar distance_to_hull(const Point& p, const AffineHull& h) {
  return abs(p[h.axis] - h.offset);
}

Point project_to_hull(const Point& p, const AffineHull& h) {
  Point q = p;
  q[h.axis] = h.offset;
  return q;
}

bool boxes_overlap(const Aabb& a, const Aabb& b, bool strict) {
  if (a.dim != b.dim) throw Error(ErrorCode::DimensionMismatch, "box/box");
  for (std::size_t k = 0; k < static_cast<std::size_t>(a.dim); ++k) {
    if (strict) {
      if (!(a.lo[k] < b.hi[k] && b.lo[k] < a.hi[k])) return false;
    } else {
      if (a.lo[k] > b.hi[k] || b.lo[k] > a.hi[k]) return false;
    }
  }
  return true;
}

bool boxes_overlap(const AxisBox& a, const AxisBox& b, bool strict) {
  require_same_dim(a.center, b.center);
  return boxes_overlap(a.to_aabb(), b.to_aabb(), strict);
}

std::pair<int, int> plane_axes(int dim, int axis) {
  if (dim == 2) return {1 - axis, -1};
  switch (axis) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

}  // namespace linfvd
