#include "staircase/routing.hpp"

#include <algorithm>
#include <tuple>

namespace staircase {

std::string_view to_string(RouteCase c) {
  switch (c) {
    case RouteCase::Direct: return "direct";
    case RouteCase::LCorner: return "l-corner";
    case RouteCase::SharedDirection: return "shared-direction";
    case RouteCase::Corner: return "corner";
    case RouteCase::GridSearch: return "grid-search";
  }
  return "?";
}

namespace {

Scalar squared_diameter(const ConvexPolygon& polygon) {
  Scalar best = 0;
  for (const Point2& a : polygon.vertices()) {
    for (const Point2& b : polygon.vertices()) {
      const Vec2 d = b - a;
      const Scalar len = dot(d, d);
      if (len > best) best = len;
    }
  }
  return best;
}

}  // namespace

RoutingScene::RoutingScene(Box window, std::vector<ConvexPolygon> obstacles)
    : window_(std::move(window)), obstacles_(std::move(obstacles)) {
  if (!(window_.xmin < window_.xmax && window_.ymin < window_.ymax)) {
    throw PreconditionError("routing window must have positive area");
  }
  for (std::size_t i = 0; i < obstacles_.size(); ++i) {
    for (std::size_t j = i + 1; j < obstacles_.size(); ++j) {
      if (polygons_intersect(obstacles_[i], obstacles_[j])) {
        throw PreconditionError("obstacles " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
  if (obstacles_.empty()) return;
  Scalar diameter2 = 0;
  Box hull = obstacles_.front().bounds();
  for (const ConvexPolygon& p : obstacles_) {
    const Scalar d2 = squared_diameter(p);
    if (d2 > diameter2) diameter2 = d2;
    const Box& b = p.bounds();
    if (b.xmin < hull.xmin) hull.xmin = b.xmin;
    if (b.ymin < hull.ymin) hull.ymin = b.ymin;
    if (b.xmax > hull.xmax) hull.xmax = b.xmax;
    if (b.ymax > hull.ymax) hull.ymax = b.ymax;
  }
  for (const Scalar& margin : {Scalar(hull.xmin - window_.xmin), Scalar(window_.xmax - hull.xmax),
                               Scalar(hull.ymin - window_.ymin), Scalar(window_.ymax - hull.ymax)}) {
    if (margin < 0 || margin * margin < diameter2) {
      throw PreconditionError("window margin is smaller than the largest obstacle diameter");
    }
  }
}

std::vector<Direction> escape_dirs(const Point2& p, const ConvexPolygon& polygon) {
  if (polygon.contains(p, Region::Interior)) throw PreconditionError("point lies in the obstacle interior");
  std::vector<Direction> out;
  for (Direction d : kDirections) {
    if (!ray_hits_convex(p, d, polygon, Region::Interior)) out.push_back(d);
  }
  return out;
}

bool path_avoids(const OrthoPath& path, const std::vector<ConvexPolygon>& obstacles) {
  const auto& v = path.vertices();
  for (const ConvexPolygon& k : obstacles) {
    if (v.size() == 1 && k.contains(v[0], Region::Interior)) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (segment_hits_convex(v[i], v[i + 1], k, Region::Interior)) return false;
    }
  }
  return true;
}

bool verify_path(const OrthoPath& path, const RoutingScene& scene) {
  for (const Point2& v : path.vertices()) {
    if (!scene.window().contains(v)) return false;
  }
  return path_avoids(path, scene.obstacles());
}

namespace {

// Coordinate strictly beyond the obstacle in direction d, and at least as
// far as p and q.
Scalar beyond(Direction d, const Box& box, const Point2& p, const Point2& q) {
  switch (d) {
    case Direction::East: return std::max({Scalar(box.xmax + 1), p.x, q.x});
    case Direction::West: return std::min({Scalar(box.xmin - 1), p.x, q.x});
    case Direction::North: return std::max({Scalar(box.ymax + 1), p.y, q.y});
    case Direction::South: return std::min({Scalar(box.ymin - 1), p.y, q.y});
  }
  return 0;
}

bool has(const std::vector<Direction>& dirs, Direction d) {
  return std::find(dirs.begin(), dirs.end(), d) != dirs.end();
}

}  // namespace

RouteResult route_around_convex(const Point2& p, const Point2& q, const ConvexPolygon& polygon) {
  if (p == q) throw PreconditionError("route endpoints coincide");
  const std::vector<Direction> ep = escape_dirs(p, polygon);
  const std::vector<Direction> eq = escape_dirs(q, polygon);
  const std::vector<ConvexPolygon> obstacles{polygon};
  std::vector<std::pair<std::vector<Point2>, RouteCase>> candidates;
  if (p.x == q.x || p.y == q.y) candidates.push_back({{p, q}, RouteCase::Direct});
  candidates.push_back({{p, {q.x, p.y}, q}, RouteCase::LCorner});
  candidates.push_back({{p, {p.x, q.y}, q}, RouteCase::LCorner});
  const Box& box = polygon.bounds();
  for (Direction d : kDirections) {
    if (!has(ep, d) || !has(eq, d)) continue;
    const Scalar t = beyond(d, box, p, q);
    if (axis_of(d) == Axis::Horizontal) {
      candidates.push_back({{p, {t, p.y}, {t, q.y}, q}, RouteCase::SharedDirection});
    } else {
      candidates.push_back({{p, {p.x, t}, {q.x, t}, q}, RouteCase::SharedDirection});
    }
  }
  for (Direction dv : {Direction::North, Direction::South}) {
    for (Direction dh : {Direction::East, Direction::West}) {
      // p leaves vertically and q horizontally, then the mirror pairing.
      if (has(ep, dv) && has(eq, dh)) {
        const Scalar ry = beyond(dv, box, p, q);
        const Scalar rx = beyond(dh, box, p, q);
        candidates.push_back({{p, {p.x, ry}, {rx, ry}, {rx, q.y}, q}, RouteCase::Corner});
      }
      if (has(ep, dh) && has(eq, dv)) {
        const Scalar rx = beyond(dh, box, p, q);
        const Scalar ry = beyond(dv, box, p, q);
        candidates.push_back({{p, {rx, p.y}, {rx, ry}, {q.x, ry}, q}, RouteCase::Corner});
      }
    }
  }
  for (const auto& [points, tag] : candidates) {
    OrthoPath path = OrthoPath::through(points);
    if (path.link_count() <= 4 && path_avoids(path, obstacles)) {
      const int links = path.link_count();
      return {std::move(path), links, true, tag};
    }
  }
  throw std::logic_error("no candidate route around the obstacle verified");
}

namespace {

std::vector<Scalar> lattice(const Scalar& lo, const Scalar& hi, const Scalar& step, const Scalar& a,
                            const Scalar& b) {
  std::vector<Scalar> out;
  for (Scalar v = lo; v < hi; v += step) out.push_back(v);
  out.push_back(hi);
  out.push_back(a);
  out.push_back(b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<RouteResult> lattice_route(const RoutingScene& scene, const Point2& p, const Point2& q,
                                         const Scalar& step) {
  const Box& w = scene.window();
  const std::vector<Scalar> xs = lattice(w.xmin, w.xmax, step, p.x, q.x);
  const std::vector<Scalar> ys = lattice(w.ymin, w.ymax, step, p.y, q.y);
  const int nx = static_cast<int>(xs.size());
  const int ny = static_cast<int>(ys.size());
  auto free_point = [&](const Point2& pt) {
    return std::none_of(scene.obstacles().begin(), scene.obstacles().end(),
                        [&](const ConvexPolygon& k) { return k.contains(pt, Region::Interior); });
  };
  auto free_segment = [&](const Point2& a, const Point2& b) {
    return std::none_of(scene.obstacles().begin(), scene.obstacles().end(),
                        [&](const ConvexPolygon& k) { return segment_hits_convex(a, b, k, Region::Interior); });
  };
  // Node (i, j) is cell (2i, 2j); the edge to its east neighbour is
  // (2i + 1, 2j) and to its north neighbour (2i, 2j + 1).
  std::vector<char> node(static_cast<std::size_t>(nx) * ny, 0);
  std::vector<Cell> cells;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      if (!free_point({xs[i], ys[j]})) continue;
      node[static_cast<std::size_t>(i) * ny + j] = 1;
      cells.push_back({2 * i, 2 * j});
    }
  }
  auto is_node = [&](int i, int j) { return node[static_cast<std::size_t>(i) * ny + j] != 0; };
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      if (!is_node(i, j)) continue;
      if (i + 1 < nx && is_node(i + 1, j) && free_segment({xs[i], ys[j]}, {xs[i + 1], ys[j]})) {
        cells.push_back({2 * i + 1, 2 * j});
      }
      if (j + 1 < ny && is_node(i, j + 1) && free_segment({xs[i], ys[j]}, {xs[i], ys[j + 1]})) {
        cells.push_back({2 * i, 2 * j + 1});
      }
    }
  }
  auto index = [](const std::vector<Scalar>& v, const Scalar& s) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), s) - v.begin());
  };
  const Cell a{2 * index(xs, p.x), 2 * index(ys, p.y)};
  const Cell b{2 * index(xs, q.x), 2 * index(ys, q.y)};
  const GridSet graph = GridSet::from_cells(cells);
  const auto found = s_distance(graph, a, b);
  if (!found) return std::nullopt;
  std::vector<Point2> lifted;
  for (const Point2& v : found->witness.vertices()) {
    const long u = v.x.get_num().get_si();
    const long t = v.y.get_num().get_si();
    lifted.push_back({xs[static_cast<std::size_t>(u / 2)], ys[static_cast<std::size_t>(t / 2)]});
  }
  OrthoPath path = OrthoPath::through(lifted);
  const bool ok = verify_path(path, scene);
  const int links = path.link_count();
  return RouteResult{std::move(path), links, ok, RouteCase::GridSearch};
}

}  // namespace

MultiRoute route_multi(const RoutingScene& scene, const Point2& p, const Point2& q, const Scalar& cell_size) {
  if (cell_size <= 0) throw PreconditionError("cell_size must be positive");
  for (const Point2& e : {p, q}) {
    if (!scene.window().contains(e)) throw PreconditionError("route endpoint lies outside the window");
    for (const ConvexPolygon& k : scene.obstacles()) {
      if (k.contains(e, Region::Interior)) throw PreconditionError("route endpoint lies inside an obstacle");
    }
  }
  MultiRoute out;
  Scalar step = cell_size;
  for (int round = 0; round <= kMaxHalvings; ++round) {
    auto route = lattice_route(scene, p, q, step);
    const bool found = route && route->verified;
    out.trace.push_back({step, found});
    if (found) {
      out.route = std::move(route);
      return out;
    }
    step /= 2;
  }
  return out;
}

bool carve_check(const GridSet& region, const ConvexPolygon& polygon, const Scalar& cell_size) {
  if (!is_orthogonally_connected(region)) throw PreconditionError("carve region is not connected");
  std::vector<Cell> carved;
  try {
    carved = rasterize_convex(polygon, cell_size).cells();
  } catch (const EmptyRasterization&) {
    return true;
  }
  for (const Cell& c : carved) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        if (!region.contains({c.col + dx, c.row + dy})) {
          throw PreconditionError("carved polygon is not inside the interior of the region");
        }
      }
    }
  }
  std::vector<Cell> remaining;
  for (const Cell& c : region.cells()) {
    if (!std::binary_search(carved.begin(), carved.end(), c, [](const Cell& l, const Cell& r) {
          return std::tie(l.row, l.col) < std::tie(r.row, r.col);
        })) {
      remaining.push_back(c);
    }
  }
  return is_orthogonally_connected(GridSet::from_cells(remaining));
}

}  // namespace staircase
