#include "staircase/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "staircase/convex_analysis.hpp"

namespace staircase {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Scalar snap(double v, long denominator, double lo, double hi) {
  v = std::clamp(v, lo, hi);
  return ratio(std::lround(v * static_cast<double>(denominator)), denominator);
}

// Hull of points on a rotated ellipse; nullopt when the snapped points are
// degenerate.
std::optional<ConvexPolygon> ellipse_polygon(Rng& rng, double cx, double cy, double rx, double ry, int k,
                                             double jitter, long denominator, double lo, double hi) {
  const double tilt = uniform_real(rng, 0, std::numbers::pi);
  std::vector<Point2> points;
  for (int i = 0; i < k; ++i) {
    const double base = 2 * std::numbers::pi * i / k;
    const double angle = jitter < 0 ? uniform_real(rng, 0, 2 * std::numbers::pi)
                                    : base + jitter * uniform_real(rng, -1, 1) * std::numbers::pi / k;
    const double ex = rx * std::cos(angle), ey = ry * std::sin(angle);
    const double x = cx + ex * std::cos(tilt) - ey * std::sin(tilt);
    const double y = cy + ex * std::sin(tilt) + ey * std::cos(tilt);
    points.push_back({snap(x, denominator, lo, hi), snap(y, denominator, lo, hi)});
  }
  try {
    return convex_hull(std::move(points));
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

}  // namespace

Scalar random_rational(Rng& rng, long lo, long hi, long denominator) {
  return ratio(uniform(rng, lo * denominator, hi * denominator), denominator);
}

ConvexPolygon random_convex_polygon(Rng& rng, int max_vertices) {
  for (;;) {
    const int k = static_cast<int>(uniform(rng, 3, std::max(3, max_vertices)));
    const double cx = uniform_real(rng, -50, 50), cy = uniform_real(rng, -50, 50);
    const double rx = uniform_real(rng, 1, 50), ry = uniform_real(rng, 1, 50);
    if (auto p = ellipse_polygon(rng, cx, cy, rx, ry, k, -1, 4, -100, 100)) return *p;
  }
}

ConvexPolygon random_lattice_polygon(Rng& rng, long lo, long hi) {
  for (;;) {
    const long k = uniform(rng, 3, 8);
    std::vector<Point2> points;
    for (long i = 0; i < k; ++i) points.push_back({Scalar(uniform(rng, lo, hi)), Scalar(uniform(rng, lo, hi))});
    try {
      return convex_hull(std::move(points));
    } catch (const PreconditionError&) {
    }
  }
}

ConvexPolygon random_obtuse_polygon(Rng& rng) {
  for (;;) {
    if (chance(rng, 1.0 / 6)) {
      const Scalar x = random_rational(rng, -50, 40, 4), y = random_rational(rng, -50, 40, 4);
      const Scalar w = random_rational(rng, 1, 50, 4), h = random_rational(rng, 1, 50, 4);
      return ConvexPolygon({{x, y}, {x + w, y}, {x + w, y + h}, {x, y + h}});
    }
    const int k = static_cast<int>(uniform(rng, 5, 12));
    const double r = uniform_real(rng, 5, 40);
    const double stretch = uniform_real(rng, 1, 1.3);
    const double cx = uniform_real(rng, -40, 40);
    const double cy = uniform_real(rng, -40, 40);
    auto p = ellipse_polygon(rng, cx, cy, r * stretch, r, k, 0.3, 4, -100, 100);
    if (p && is_obtuse_body(*p)) return *p;
  }
}

Point2 random_exterior_point(Rng& rng, const ConvexPolygon& polygon) {
  if (chance(rng, 1.0 / 8)) {
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(polygon.size()) - 1));
    const Scalar t(uniform(rng, 0, 3), 4);
    return polygon.vertex(i) + t * (polygon.next(i) - polygon.vertex(i));
  }
  const Box& b = polygon.bounds();
  const long x0 = floor_to_long(b.xmin) - 20, x1 = ceil_to_long(b.xmax) + 20;
  const long y0 = floor_to_long(b.ymin) - 20, y1 = ceil_to_long(b.ymax) + 20;
  for (;;) {
    const Point2 p{random_rational(rng, x0, x1, 4), random_rational(rng, y0, y1, 4)};
    if (!polygon.contains(p, Region::Interior)) return p;
  }
}

namespace {

constexpr long kComplexSpan = 6;

Rect rect_through(Rng& rng, long px, long py) {
  Rect r{Scalar(uniform(rng, 0, px)), Scalar(uniform(rng, 0, py)), Scalar(uniform(rng, px, kComplexSpan)),
         Scalar(uniform(rng, py, kComplexSpan))};
  if (chance(rng, 0.2)) {
    if (chance(rng, 0.5)) {
      r.xmin = r.xmax = px;
    } else {
      r.ymin = r.ymax = py;
    }
  }
  return r;
}

// Rectangle meeting `r` only at one of its corners, when there is room.
std::optional<Rect> corner_touch(Rng& rng, const Rect& r) {
  const int corner = static_cast<int>(uniform(rng, 0, 3));
  const bool east = corner & 1, north = corner & 2;
  const Scalar cx = east ? r.xmax : r.xmin, cy = north ? r.ymax : r.ymin;
  const long ix = cx.get_num().get_si(), iy = cy.get_num().get_si();
  const long room_x = east ? kComplexSpan - ix : ix;
  const long room_y = north ? kComplexSpan - iy : iy;
  if (room_x < 1 || room_y < 1) return std::nullopt;
  const long w = uniform(rng, 1, room_x), h = uniform(rng, 1, room_y);
  Rect out{cx, cy, cx, cy};
  (east ? out.xmax : out.xmin) = east ? Scalar(ix + w) : Scalar(ix - w);
  (north ? out.ymax : out.ymin) = north ? Scalar(iy + h) : Scalar(iy - h);
  return out;
}

}  // namespace

RectComplex random_connected_complex(Rng& rng, int max_rects) {
  const long n = uniform(rng, 1, std::max(1, max_rects));
  std::vector<Rect> rects;
  const long x0 = uniform(rng, 0, kComplexSpan);
  const long y0 = uniform(rng, 0, kComplexSpan);
  rects.push_back(rect_through(rng, x0, y0));
  while (static_cast<long>(rects.size()) < n) {
    const Rect anchor = rects[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rects.size()) - 1))];
    if (chance(rng, 1.0 / 6)) {
      if (auto r = corner_touch(rng, anchor)) {
        rects.push_back(*r);
        continue;
      }
    }
    const long px = uniform(rng, anchor.xmin.get_num().get_si(), anchor.xmax.get_num().get_si());
    const long py = uniform(rng, anchor.ymin.get_num().get_si(), anchor.ymax.get_num().get_si());
    rects.push_back(rect_through(rng, px, py));
  }
  return RectComplex(std::move(rects));
}

RectComplex random_column_complex(Rng& rng) {
  const long columns = uniform(rng, 2, 5);
  long x = uniform(rng, 0, 3);
  long lo = uniform(rng, 0, 4);
  long hi = lo + uniform(rng, 1, 4);
  std::vector<Rect> rects;
  for (long c = 0; c < columns; ++c) {
    const long x1 = x + uniform(rng, 1, 3);
    if (chance(rng, 0.25) && hi - lo >= 2) {
      const long mid = uniform(rng, lo + 1, hi - 1);
      rects.push_back({Scalar(x), Scalar(lo), Scalar(x1), Scalar(mid + uniform(rng, 0, hi - mid))});
      rects.push_back({Scalar(x), Scalar(mid), Scalar(x1), Scalar(hi)});
    } else {
      rects.push_back({Scalar(x), Scalar(lo), Scalar(x1), Scalar(hi)});
    }
    const long nlo = uniform(rng, lo - 2, hi - 1);
    const long nhi = uniform(rng, std::max(nlo + 1, lo + 1), hi + 2);
    x = x1;
    lo = nlo;
    hi = nhi;
  }
  return RectComplex(std::move(rects));
}

CarveCase random_carve_case(Rng& rng) {
  std::vector<Cell> cells;
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) {
      const bool ring = x < 3 || y < 3 || x > 12 || y > 12;
      if (ring && chance(rng, 0.3)) continue;
      cells.push_back({x, y});
    }
  }
  GridSet region = largest_component(GridSet::from_cells(cells));
  for (;;) {
    std::vector<Point2> points;
    const long k = uniform(rng, 3, 8);
    for (long i = 0; i < k; ++i) points.push_back({random_rational(rng, 5, 11, 4), random_rational(rng, 5, 11, 4)});
    try {
      return {region, convex_hull(std::move(points)), Scalar(1)};
    } catch (const PreconditionError&) {
    }
  }
}

MultiRouteCase random_multi_route_case(Rng& rng) {
  const long count = uniform(rng, 0, 5);
  std::vector<ConvexPolygon> obstacles;
  for (long i = 0; i < count; ++i) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      const double r = uniform_real(rng, 2, 8);
      const double cx = uniform_real(rng, 0, 60);
      const double cy = uniform_real(rng, 0, 60);
      const double rx = r * uniform_real(rng, 0.4, 1);
      const int k = static_cast<int>(uniform(rng, 3, 8));
      auto p = ellipse_polygon(rng, cx, cy, rx, r, k, -1, 4, -1000, 1000);
      if (!p) continue;
      const bool clash = std::any_of(obstacles.begin(), obstacles.end(),
                                     [&](const ConvexPolygon& o) { return polygons_intersect(o, *p); });
      if (clash) continue;
      obstacles.push_back(*p);
      break;
    }
  }
  Box window{0, 0, 60, 60};
  if (!obstacles.empty()) {
    Box hull = obstacles.front().bounds();
    double diameter = 0;
    for (const ConvexPolygon& o : obstacles) {
      const Box& b = o.bounds();
      hull.xmin = std::min(hull.xmin, b.xmin);
      hull.ymin = std::min(hull.ymin, b.ymin);
      hull.xmax = std::max(hull.xmax, b.xmax);
      hull.ymax = std::max(hull.ymax, b.ymax);
      for (const Point2& a : o.vertices()) {
        for (const Point2& c : o.vertices()) {
          const Vec2 d = c - a;
          diameter = std::max(diameter, std::sqrt(dot(d, d).get_d()));
        }
      }
    }
    const long margin = static_cast<long>(std::ceil(diameter)) + 1;
    window = {Scalar(floor_to_long(hull.xmin) - margin), Scalar(floor_to_long(hull.ymin) - margin),
              Scalar(ceil_to_long(hull.xmax) + margin), Scalar(ceil_to_long(hull.ymax) + margin)};
  }
  RoutingScene scene(window, obstacles);
  auto free_point = [&]() {
    for (;;) {
      const Point2 p{random_rational(rng, floor_to_long(window.xmin), floor_to_long(window.xmax), 4),
                     random_rational(rng, floor_to_long(window.ymin), floor_to_long(window.ymax), 4)};
      const bool blocked = std::any_of(obstacles.begin(), obstacles.end(),
                                       [&](const ConvexPolygon& o) { return o.contains(p, Region::Interior); });
      if (!blocked) return p;
    }
  };
  const Point2 p = free_point();
  const Point2 q = free_point();
  const Scalar cell = Scalar(window.xmax - window.xmin) / Scalar(uniform(rng, 24, 32));
  return {std::move(scene), p, q, cell};
}

}  // namespace staircase
