#include "staircase/convex_polygon.hpp"

#include <algorithm>
#include <string>

namespace staircase {

ConvexPolygon::ConvexPolygon(std::vector<Point2> ccw_vertices) : vertices_(std::move(ccw_vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw PreconditionError("convex polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(vertex(i), vertex(i + 1), vertex(i + 2)) != 1) {
      throw PreconditionError("polygon is not strictly convex counter-clockwise at vertex " +
                              std::to_string((i + 1) % n));
    }
  }
  // Local left turns everywhere still admit a star that winds twice; a
  // simple convex polygon turns through exactly 2*pi, so every vertex must
  // lie left of (or on) each edge line.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (orient(vertex(i), vertex(i + 1), vertices_[j]) < 0) {
        throw PreconditionError("polygon vertices wind more than once");
      }
    }
  }
  bounds_ = {vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  for (const Point2& p : vertices_) {
    if (p.x < bounds_.xmin) bounds_.xmin = p.x;
    if (p.x > bounds_.xmax) bounds_.xmax = p.x;
    if (p.y < bounds_.ymin) bounds_.ymin = p.y;
    if (p.y > bounds_.ymax) bounds_.ymax = p.y;
  }
}

bool ConvexPolygon::contains(const Point2& p, Region region) const {
  if (!bounds_.contains(p)) return false;
  const int need = region == Region::Interior ? 1 : 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (orient(vertex(i), next(i), p) < need) return false;
  }
  return true;
}

std::optional<std::size_t> ConvexPolygon::vertex_index(const Point2& p) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (vertices_[i] == p) return i;
  }
  return std::nullopt;
}

bool ConvexPolygon::on_boundary(const Point2& p) const {
  return contains(p, Region::Closed) && !contains(p, Region::Interior);
}

namespace {

std::optional<std::pair<Scalar, Scalar>> chord(const std::vector<Point2>& vs, const Scalar& level,
                                               bool horizontal) {
  auto along = [&](const Point2& p) -> const Scalar& { return horizontal ? p.x : p.y; };
  auto across = [&](const Point2& p) -> const Scalar& { return horizontal ? p.y : p.x; };
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;
  auto take = [&](const Scalar& v) {
    if (!lo || v < *lo) lo = v;
    if (!hi || v > *hi) hi = v;
  };
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vs[i];
    const Point2& b = vs[(i + 1) % n];
    const Scalar& ca = across(a);
    const Scalar& cb = across(b);
    if (ca == level) take(along(a));
    if ((ca < level && level < cb) || (cb < level && level < ca)) {
      const Scalar t = (level - ca) / (cb - ca);
      take(along(a) + t * (along(b) - along(a)));
    }
  }
  if (!lo) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

// Feasibility of { t : lo <= t <= hi, a + t d in P } with the given region.
// hi absent means an unbounded ray.
bool parameter_range_meets(const Point2& a, const Vec2& d, const ConvexPolygon& polygon,
                           Region region, bool bounded) {
  const bool strict = region == Region::Interior;
  Scalar lo = 0;
  bool lo_open = false;
  Scalar hi = 1;
  bool hi_open = false;
  bool has_hi = bounded;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point2& v = polygon.vertex(i);
    const Vec2 e = polygon.next(i) - v;
    const Scalar c = cross(e, a - v);
    const Scalar k = cross(e, d);
    const int ks = sign_of(k);
    if (ks == 0) {
      const int cs = sign_of(c);
      if (cs < 0 || (strict && cs == 0)) return false;
      continue;
    }
    const Scalar bound = -c / k;
    if (ks > 0) {
      if (bound > lo || (bound == lo && strict)) {
        if (bound != lo) lo_open = false;
        lo = bound;
        lo_open = lo_open || strict;
      }
    } else {
      if (!has_hi || bound < hi || (bound == hi && strict)) {
        if (!has_hi || bound != hi) hi_open = false;
        hi = bound;
        hi_open = hi_open || strict;
        has_hi = true;
      }
    }
  }
  if (!has_hi) return true;
  if (lo < hi) return true;
  return lo == hi && !lo_open && !hi_open;
}

}  // namespace

std::optional<std::pair<Scalar, Scalar>> ConvexPolygon::horizontal_chord(const Scalar& y) const {
  if (y < bounds_.ymin || y > bounds_.ymax) return std::nullopt;
  return chord(vertices_, y, true);
}

std::optional<std::pair<Scalar, Scalar>> ConvexPolygon::vertical_chord(const Scalar& x) const {
  if (x < bounds_.xmin || x > bounds_.xmax) return std::nullopt;
  return chord(vertices_, x, false);
}

bool segment_hits_convex(const Point2& a, const Point2& b, const ConvexPolygon& polygon,
                         Region region) {
  const Box& box = polygon.bounds();
  if ((a.x < box.xmin && b.x < box.xmin) || (a.x > box.xmax && b.x > box.xmax) ||
      (a.y < box.ymin && b.y < box.ymin) || (a.y > box.ymax && b.y > box.ymax)) {
    return false;
  }
  return parameter_range_meets(a, b - a, polygon, region, true);
}

bool ray_hits_convex(const Point2& origin, Direction d, const ConvexPolygon& polygon, Region region) {
  return parameter_range_meets(origin, unit_vector(d), polygon, region, false);
}

bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  const Box& ba = a.bounds();
  const Box& bb = b.bounds();
  if (ba.xmax < bb.xmin || bb.xmax < ba.xmin || ba.ymax < bb.ymin || bb.ymax < ba.ymin) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (segment_hits_convex(a.vertex(i), a.next(i), b, Region::Closed)) return true;
  }
  // No edge of a meets b, so either b sits inside a or they are disjoint.
  return a.contains(b.vertex(0), Region::Closed);
}

}  // namespace staircase
