#include "staircase/convex_analysis.hpp"

#include <algorithm>
#include <numeric>

#include "staircase/grid.hpp"

namespace staircase {

std::string_view to_string(AlphaClass c) {
  switch (c) {
    case AlphaClass::Acute: return "acute";
    case AlphaClass::Right: return "right";
    case AlphaClass::ObtuseAngle: return "obtuse";
    case AlphaClass::Flat: return "flat";
  }
  return "?";
}

std::string_view to_string(ExtremeReason r) {
  switch (r) {
    case ExtremeReason::Hw0: return "hw0";
    case ExtremeReason::Vw0: return "vw0";
    case ExtremeReason::Both: return "both";
  }
  return "?";
}

namespace {

std::size_t require_vertex(const ConvexPolygon& polygon, const Point2& v) {
  const auto i = polygon.vertex_index(v);
  if (!i) throw PreconditionError("point is not a vertex of the polygon");
  return *i;
}

bool cone_has(const Vec2& first, const Vec2& second, const Vec2& e) {
  return sign_of(cross(first, e)) >= 0 && sign_of(cross(e, second)) >= 0;
}

}  // namespace

TangentCone tangent_cone(const ConvexPolygon& polygon, const Point2& x) {
  if (const auto i = polygon.vertex_index(x)) {
    return {x, polygon.next(*i) - x, polygon.prev(*i) - x, true};
  }
  if (!polygon.on_boundary(x)) throw PreconditionError("point is not on the polygon boundary");
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (orient(polygon.vertex(i), polygon.next(i), x) == 0) {
      const Vec2 e = polygon.next(i) - polygon.vertex(i);
      return {x, e, Scalar(-1) * e, true};
    }
  }
  throw std::logic_error("boundary point on no edge");
}

AlphaClass alpha_class(const ConvexPolygon& polygon, const Point2& x) {
  const TangentCone cone = tangent_cone(polygon, x);
  if (!polygon.vertex_index(x)) return AlphaClass::Flat;
  const int s = dot_sign(cone.first, cone.second);
  if (s == 0) return AlphaClass::Right;
  return s > 0 ? AlphaClass::Acute : AlphaClass::ObtuseAngle;
}

bool is_obtuse_body(const ConvexPolygon& polygon) {
  return std::all_of(polygon.vertices().begin(), polygon.vertices().end(),
                     [&](const Point2& v) { return alpha_class(polygon, v) != AlphaClass::Acute; });
}

std::vector<Direction> cone_contains_axis_dir(const ConvexPolygon& polygon, const Point2& v) {
  const std::size_t i = require_vertex(polygon, v);
  const Vec2 first = polygon.next(i) - v;
  const Vec2 second = polygon.prev(i) - v;
  std::vector<Direction> out;
  for (Direction d : kDirections) {
    if (cone_has(first, second, unit_vector(d))) out.push_back(d);
  }
  return out;
}

ConvexCertificate is_staircase_connected_convex(const ConvexPolygon& polygon) {
  for (const Point2& v : polygon.vertices()) {
    if (cone_contains_axis_dir(polygon, v).empty()) return {false, v};
  }
  return {true, std::nullopt};
}

std::vector<Point2> non_obtuse_vertices(const ConvexPolygon& polygon) {
  std::vector<Point2> out;
  for (const Point2& v : polygon.vertices()) {
    const AlphaClass c = alpha_class(polygon, v);
    if (c == AlphaClass::Acute || c == AlphaClass::Right) out.push_back(v);
  }
  return out;
}

ConvexPolygon AffineMap::apply(const ConvexPolygon& polygon) const {
  std::vector<Point2> out;
  out.reserve(polygon.size());
  for (const Point2& v : polygon.vertices()) out.push_back(apply(v));
  return ConvexPolygon(std::move(out));
}

bool AffineMap::is_similarity() const {
  const Scalar det = a * d - b * c;
  return a * b + c * d == 0 && a * a + c * c == b * b + d * d && det > 0;
}

Rotation rotate_to_staircase(const ConvexPolygon& polygon) {
  if (is_obtuse_body(polygon) || is_staircase_connected_convex(polygon).staircase_connected) {
    return {polygon, AffineMap::identity()};
  }
  const std::vector<Point2> candidates = non_obtuse_vertices(polygon);
  const Point2& a = candidates.front();
  const Point2 b = candidates.size() >= 2 ? candidates[1] : polygon.next(*polygon.vertex_index(a));
  const Vec2 dir = b - a;
  AffineMap map{dir.x, dir.y, -dir.y, dir.x, 0, 0};
  map.tx = -(map.a * a.x + map.b * a.y);
  map.ty = -(map.c * a.x + map.d * a.y);
  return {map.apply(polygon), map};
}

ConvexPolygon convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) throw PreconditionError("hull needs three non-collinear points");
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point2& p : points) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = points.size() - 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw PreconditionError("hull needs three non-collinear points");
  return ConvexPolygon(std::move(hull));
}

ConvexPolygon hull_of_union(std::span<const ConvexPolygon> polygons) {
  std::vector<Point2> points;
  for (const ConvexPolygon& p : polygons) {
    points.insert(points.end(), p.vertices().begin(), p.vertices().end());
  }
  return convex_hull(std::move(points));
}

bool check_hull_obtuse(std::span<const ConvexPolygon> polygons) {
  if (polygons.empty()) throw PreconditionError("hull check needs at least one polygon");
  for (const ConvexPolygon& p : polygons) {
    if (!is_obtuse_body(p)) throw PreconditionError("hull check input polygon is not obtuse");
  }
  const ConvexPolygon hull = hull_of_union(polygons);
  return is_obtuse_body(hull) && is_staircase_connected_convex(hull).staircase_connected;
}

namespace {

bool union_is_connected(std::span<const ConvexPolygon> polygons) {
  const std::size_t n = polygons.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || !polygons_intersect(polygons[i], polygons[j])) continue;
      seen[j] = 1;
      ++count;
      stack.push_back(j);
    }
  }
  return count == n;
}

bool rasterized_union_connected(std::span<const ConvexPolygon> polygons, const Scalar& cell) {
  std::vector<Cell> cells;
  for (const ConvexPolygon& p : polygons) {
    try {
      const std::vector<Cell> part = rasterize_convex(p, cell).cells();
      cells.insert(cells.end(), part.begin(), part.end());
    } catch (const EmptyRasterization&) {
    }
  }
  if (cells.empty()) throw EmptyRasterization("no cell center lies in the union");
  return is_orthogonally_connected(GridSet::from_cells(cells));
}

}  // namespace

UnionConnectivity union_orthogonal_connectivity_check(std::span<const ConvexPolygon> polygons,
                                                      const Scalar& cell_size) {
  if (polygons.empty()) throw PreconditionError("union check needs at least one polygon");
  for (const ConvexPolygon& p : polygons) {
    if (!is_obtuse_body(p)) throw PreconditionError("union check input polygon is not obtuse");
  }
  if (!union_is_connected(polygons)) throw PreconditionError("union of polygons is not connected");
  UnionConnectivity out;
  out.coarse_cell = cell_size;
  out.fine_cell = cell_size / 2;
  out.coarse_connected = rasterized_union_connected(polygons, out.coarse_cell);
  out.fine_connected = rasterized_union_connected(polygons, out.fine_cell);
  return out;
}

std::vector<ExtremePoint> s_extreme_points(const ConvexPolygon& polygon) {
  const Box& box = polygon.bounds();
  auto unique_at = [&](auto&& coord, const Scalar& value) -> std::optional<std::size_t> {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
      if (coord(polygon.vertex(i)) != value) continue;
      if (hit) return std::nullopt;
      hit = i;
    }
    return hit;
  };
  auto x_of = [](const Point2& p) -> const Scalar& { return p.x; };
  auto y_of = [](const Point2& p) -> const Scalar& { return p.y; };
  std::vector<int> flags(polygon.size(), 0);
  for (const auto& hit : {unique_at(y_of, box.ymax), unique_at(y_of, box.ymin)}) {
    if (hit) flags[*hit] |= 1;
  }
  for (const auto& hit : {unique_at(x_of, box.xmax), unique_at(x_of, box.xmin)}) {
    if (hit) flags[*hit] |= 2;
  }
  std::vector<ExtremePoint> out;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (flags[i] == 0) continue;
    const ExtremeReason r = flags[i] == 3 ? ExtremeReason::Both
                            : flags[i] == 1 ? ExtremeReason::Hw0
                                            : ExtremeReason::Vw0;
    out.push_back({polygon.vertex(i), r});
  }
  return out;
}

Scalar horizontal_chord_length(const ConvexPolygon& polygon, const Point2& p) {
  if (!polygon.contains(p, Region::Closed)) throw PreconditionError("point is not in the polygon");
  const auto chord = polygon.horizontal_chord(p.y);
  return chord->second - chord->first;
}

Scalar vertical_chord_length(const ConvexPolygon& polygon, const Point2& p) {
  if (!polygon.contains(p, Region::Closed)) throw PreconditionError("point is not in the polygon");
  const auto chord = polygon.vertical_chord(p.x);
  return chord->second - chord->first;
}

std::optional<OrthoPath> staircase_through_vertex(const ConvexPolygon& polygon, const Point2& e) {
  require_vertex(polygon, e);
  const auto h = polygon.horizontal_chord(e.y);
  const auto v = polygon.vertical_chord(e.x);
  if (h->first == h->second || v->first == v->second) return std::nullopt;
  const Point2 b{h->first == e.x ? h->second : h->first, e.y};
  const Point2 c{e.x, v->first == e.y ? v->second : v->first};
  return OrthoPath::through({b, e, c});
}

}  // namespace staircase
