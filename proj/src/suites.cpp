#include "staircase/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include "staircase/convex_analysis.hpp"
#include "staircase/generators.hpp"
#include "staircase/grid.hpp"
#include "staircase/rect_complex.hpp"
#include "staircase/routing.hpp"

namespace staircase {

Json SuiteReport::to_json() const {
  Json out{{"suite", suite}, {"seed", seed}, {"n", n}, {"passed", passed}, {"failed", failed},
           {"skipped", skipped}, {"status", ok() ? "pass" : "fail"}};
  if (first_failure) {
    Json f{{"case", *first_failure}, {"detail", failure_detail}};
    if (counterexample) f["counterexample"] = *counterexample;
    out["first_failure"] = f;
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("STAIRCASE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

class Suite {
 public:
  virtual ~Suite() = default;
  virtual CaseOutcome run(std::uint64_t seed) const = 0;
  // Regenerates the case, shrinks it while it keeps failing, serializes.
  virtual std::pair<Json, std::string> minimize(std::uint64_t seed) const = 0;
  std::string description;
};

template <typename T>
class TypedSuite : public Suite {
 public:
  std::function<T(Rng&)> generate;
  std::function<CaseOutcome(const T&)> check;
  std::function<std::vector<T>(const T&)> shrink = [](const T&) { return std::vector<T>{}; };
  std::function<Json(const T&)> serialize;

  CaseOutcome run(std::uint64_t seed) const override {
    Rng rng(seed);
    return guarded(generate(rng));
  }

  std::pair<Json, std::string> minimize(std::uint64_t seed) const override {
    Rng rng(seed);
    T current = generate(rng);
    std::string detail = guarded(current).detail;
    int budget = 400;
    bool progress = true;
    while (progress && budget > 0) {
      progress = false;
      for (T& candidate : shrink(current)) {
        if (--budget < 0) break;
        CaseOutcome o = guarded(candidate);
        if (o.kind == CaseOutcome::Kind::Fail) {
          current = std::move(candidate);
          detail = std::move(o.detail);
          progress = true;
          break;
        }
      }
    }
    return {serialize(current), detail};
  }

 private:
  CaseOutcome guarded(const T& value) const {
    try {
      return check(value);
    } catch (const std::exception& e) {
      return CaseOutcome::fail(std::string("exception: ") + e.what());
    }
  }
};

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::string str(const Point2& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string str(Cell c) { return "(" + std::to_string(c.col) + ", " + std::to_string(c.row) + ")"; }

// ---- grid helpers ----

Json grid_fragment(const GridSet& g) { return Json{{"grids", Json{{"counterexample", grid_json(g)}}}}; }

std::vector<GridSet> drop_one_cell(const GridSet& g) {
  std::vector<GridSet> out;
  const std::vector<Cell> cells = g.cells();
  if (cells.size() <= 1) return out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<Cell> rest;
    rest.reserve(cells.size() - 1);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j != i) rest.push_back(cells[j]);
    }
    out.push_back(GridSet::from_cells(rest));
  }
  return out;
}

// Every unit step of the path stays in the grid.
bool path_in_grid(const GridSet& g, const OrthoPath& path) {
  const auto& v = path.vertices();
  Cell cur{static_cast<int>(v[0].x.get_num().get_si()), static_cast<int>(v[0].y.get_num().get_si())};
  if (!g.contains(cur)) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Direction d = path.edge_direction(i);
    const Cell target{static_cast<int>(v[i + 1].x.get_num().get_si()), static_cast<int>(v[i + 1].y.get_num().get_si())};
    while (cur != target) {
      cur = {cur.col + step_x(d), cur.row + step_y(d)};
      if (!g.contains(cur)) return false;
    }
  }
  return true;
}

Cell random_cell(Rng& rng, const std::vector<Cell>& cells) {
  return cells[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(cells.size()) - 1))];
}

std::unique_ptr<Suite> lemma41() {
  auto s = std::make_unique<TypedSuite<GridSet>>();
  s->description = "grid staircase connectivity equals the all-pairs monotone path oracle";
  s->generate = [](Rng& rng) {
    const std::uint64_t seed = rng();
    const int w = static_cast<int>(pick(rng, 1, 20));
    const int h = static_cast<int>(pick(rng, 1, 20));
    return random_grid(seed, w, h, 0.55);
  };
  s->check = [](const GridSet& g) {
    const bool fast = is_staircase_connected(g);
    const bool oracle = all_pairs_monotone_connected(g);
    if (fast == oracle) return CaseOutcome::pass();
    return CaseOutcome::fail("is_staircase_connected = " + std::to_string(fast) + ", oracle = " + std::to_string(oracle));
  };
  s->shrink = drop_one_cell;
  s->serialize = grid_fragment;
  return s;
}

std::unique_ptr<Suite> thm42() {
  auto s = std::make_unique<TypedSuite<GridSet>>();
  s->description = "staircase connected grids have no bounded complement component";
  s->generate = [](Rng& rng) {
    const std::uint64_t seed = rng();
    const int w = static_cast<int>(pick(rng, 1, 20));
    const int h = static_cast<int>(pick(rng, 1, 20));
    return random_staircase_grid(seed, w, h);
  };
  s->check = [](const GridSet& g) {
    if (!is_staircase_connected(g)) return CaseOutcome::skip("not staircase connected");
    const int holes = bounded_complement_components(g, 1);
    if (holes == 0) return CaseOutcome::pass();
    return CaseOutcome::fail(std::to_string(holes) + " bounded complement components");
  };
  s->serialize = grid_fragment;
  return s;
}

std::unique_ptr<Suite> greedy() {
  auto s = std::make_unique<TypedSuite<GridSet>>();
  s->description = "greedy staircase succeeds for every ordered pair of a staircase connected grid";
  s->generate = [](Rng& rng) {
    const std::uint64_t seed = rng();
    const int w = static_cast<int>(pick(rng, 1, 12));
    const int h = static_cast<int>(pick(rng, 1, 12));
    return random_staircase_grid(seed, w, h);
  };
  s->check = [](const GridSet& g) {
    const std::vector<Cell> cells = g.cells();
    for (const Cell& a : cells) {
      for (const Cell& b : cells) {
        const GreedyOutcome out = greedy_staircase(g, a, b);
        if (!out.success) return CaseOutcome::fail("greedy blocked from " + str(a) + " to " + str(b));
        if (!out.path.is_staircase() || !path_in_grid(g, out.path) || !(out.path.front() == to_point(a)) ||
            !(out.path.back() == to_point(b))) {
          return CaseOutcome::fail("greedy path invalid from " + str(a) + " to " + str(b));
        }
      }
    }
    return CaseOutcome::pass();
  };
  s->serialize = grid_fragment;
  return s;
}

std::unique_ptr<Suite> sdistance() {
  auto s = std::make_unique<TypedSuite<GridSet>>();
  s->description = "s-distance symmetry, witness validity and triangle inequality";
  s->generate = [](Rng& rng) {
    const std::uint64_t seed = rng();
    const int w = static_cast<int>(pick(rng, 1, 10));
    const int h = static_cast<int>(pick(rng, 1, 10));
    return largest_component(random_grid(seed, w, h, 0.65));
  };
  s->check = [](const GridSet& g) {
    Rng rng(g.cell_count() * 7919 + static_cast<std::uint64_t>(g.width()));
    const std::vector<Cell> cells = g.cells();
    const int diameter = s_diameter(g);
    for (int t = 0; t < 30; ++t) {
      const Cell a = random_cell(rng, cells), b = random_cell(rng, cells), c = random_cell(rng, cells);
      const auto ab = s_distance(g, a, b), ba = s_distance(g, b, a);
      const auto bc = s_distance(g, b, c), ac = s_distance(g, a, c);
      if (!ab || !ba || !bc || !ac) return CaseOutcome::fail("connected grid reported unreachable pair");
      if (ab->links != ba->links) return CaseOutcome::fail("asymmetric distance " + str(a) + " " + str(b));
      if ((ab->links == 0) != (a == b)) return CaseOutcome::fail("zero distance mismatch at " + str(a));
      if (ac->links > ab->links + bc->links) return CaseOutcome::fail("triangle inequality fails");
      if (ab->links > diameter) return CaseOutcome::fail("distance exceeds s_diameter");
      const OrthoPath& w = ab->witness;
      if (w.link_count() != ab->links || !path_in_grid(g, w) || !(w.front() == to_point(a)) ||
          !(w.back() == to_point(b))) {
        return CaseOutcome::fail("invalid witness from " + str(a) + " to " + str(b));
      }
    }
    return CaseOutcome::pass();
  };
  s->serialize = grid_fragment;
  return s;
}

// ---- routing ----

struct LinkCase {
  ConvexPolygon polygon;
  std::vector<SceneQuery> pairs;
};

Json single_obstacle_fragment(const ConvexPolygon& polygon, const std::vector<SceneQuery>& pairs) {
  Box w = polygon.bounds();
  for (const SceneQuery& q : pairs) {
    for (const Point2& p : {q.p, q.q}) {
      w.xmin = std::min(w.xmin, p.x);
      w.ymin = std::min(w.ymin, p.y);
      w.xmax = std::max(w.xmax, p.x);
      w.ymax = std::max(w.ymax, p.y);
    }
  }
  const Scalar pad = std::max(Scalar(w.xmax - w.xmin), Scalar(w.ymax - w.ymin)) + 1;
  const SceneSpec scene{{w.xmin - pad, w.ymin - pad, w.xmax + pad, w.ymax + pad}, {polygon}, pairs, std::nullopt};
  return Json{{"polygons", Json{{"counterexample", polygon_json(polygon)}}},
              {"scenes", Json{{"counterexample", scene_json(scene)}}}};
}

std::vector<LinkCase> shrink_link_case(const LinkCase& c) {
  std::vector<LinkCase> out;
  if (c.pairs.size() > 1) {
    for (const SceneQuery& q : c.pairs) out.push_back({c.polygon, {q}});
  }
  if (c.polygon.size() > 3) {
    for (std::size_t i = 0; i < c.polygon.size(); ++i) {
      std::vector<Point2> rest;
      for (std::size_t j = 0; j < c.polygon.size(); ++j) {
        if (j != i) rest.push_back(c.polygon.vertex(j));
      }
      try {
        ConvexPolygon smaller(rest);
        const bool exterior = std::all_of(c.pairs.begin(), c.pairs.end(), [&](const SceneQuery& q) {
          return !smaller.contains(q.p, Region::Interior) && !smaller.contains(q.q, Region::Interior);
        });
        if (exterior) out.push_back({smaller, c.pairs});
      } catch (const PreconditionError&) {
      }
    }
  }
  return out;
}

std::unique_ptr<Suite> thm31() {
  auto s = std::make_unique<TypedSuite<LinkCase>>();
  s->description = "route around one convex polygon uses at most four links (50 pairs per case)";
  s->generate = [](Rng& rng) {
    LinkCase c{random_convex_polygon(rng), {}};
    while (c.pairs.size() < 50) {
      const Point2 p = random_exterior_point(rng, c.polygon), q = random_exterior_point(rng, c.polygon);
      if (!(p == q)) c.pairs.push_back({p, q});
    }
    return c;
  };
  s->check = [](const LinkCase& c) {
    const std::vector<ConvexPolygon> obstacles{c.polygon};
    for (std::size_t i = 0; i < c.pairs.size(); ++i) {
      const SceneQuery& q = c.pairs[i];
      const RouteResult r = route_around_convex(q.p, q.q, c.polygon);
      const bool ok = r.verified && r.links <= 4 && r.links == r.path.link_count() && r.path.front() == q.p &&
                      r.path.back() == q.q && path_avoids(r.path, obstacles);
      if (!ok) return CaseOutcome::fail("pair " + std::to_string(i) + ": " + std::to_string(r.links) + " links");
    }
    return CaseOutcome::pass();
  };
  s->shrink = shrink_link_case;
  s->serialize = [](const LinkCase& c) { return single_obstacle_fragment(c.polygon, c.pairs); };
  return s;
}

std::unique_ptr<Suite> escape() {
  auto s = std::make_unique<TypedSuite<LinkCase>>();
  s->description = "every exterior point has a free horizontal and a free vertical ray";
  s->generate = [](Rng& rng) {
    LinkCase c{random_convex_polygon(rng), {}};
    while (c.pairs.size() < 20) {
      const Point2 p = random_exterior_point(rng, c.polygon);
      c.pairs.push_back({p, p});
    }
    return c;
  };
  s->check = [](const LinkCase& c) {
    for (const SceneQuery& q : c.pairs) {
      const std::vector<Direction> dirs = escape_dirs(q.p, c.polygon);
      const bool h = std::any_of(dirs.begin(), dirs.end(), [](Direction d) { return axis_of(d) == Axis::Horizontal; });
      const bool v = std::any_of(dirs.begin(), dirs.end(), [](Direction d) { return axis_of(d) == Axis::Vertical; });
      if (!h || !v) return CaseOutcome::fail("no free ray on one axis from " + str(q.p));
      for (Direction d : kDirections) {
        if (!ray_hits_convex(q.p, d, c.polygon, Region::Closed) && ray_hits_convex(q.p, d, c.polygon, Region::Interior)) {
          return CaseOutcome::fail("interior ray hit without closed hit from " + str(q.p));
        }
      }
    }
    return CaseOutcome::pass();
  };
  s->shrink = shrink_link_case;
  s->serialize = [](const LinkCase& c) { return single_obstacle_fragment(c.polygon, c.pairs); };
  return s;
}

std::unique_ptr<Suite> thm33() {
  auto s = std::make_unique<TypedSuite<CarveCase>>();
  s->description = "removing a rasterized convex polygon from the interior of a connected grid keeps it connected";
  s->generate = random_carve_case;
  s->check = [](const CarveCase& c) {
    return carve_check(c.region, c.polygon, c.cell_size) ? CaseOutcome::pass()
                                                         : CaseOutcome::fail("remainder is disconnected");
  };
  s->serialize = [](const CarveCase& c) {
    return Json{{"grids", Json{{"region", grid_json(c.region)}}},
                {"polygons", Json{{"carved", polygon_json(c.polygon)}}}};
  };
  return s;
}

std::unique_ptr<Suite> thm34() {
  auto s = std::make_unique<TypedSuite<MultiRouteCase>>();
  s->description = "grid-backed routing among disjoint convex obstacles finds a verified route";
  s->generate = random_multi_route_case;
  s->check = [](const MultiRouteCase& c) {
    const MultiRoute m = route_multi(c.scene, c.p, c.q, c.cell_size);
    if (m.exhausted()) return CaseOutcome::fail("resolution exhausted after " + std::to_string(m.trace.size()) + " rounds");
    const OrthoPath& path = m.route->path;
    if (!verify_path(path, c.scene) || !(path.front() == c.p) || !(path.back() == c.q)) {
      return CaseOutcome::fail("route does not verify");
    }
    return CaseOutcome::pass();
  };
  s->serialize = [](const MultiRouteCase& c) {
    const SceneSpec spec{c.scene.window(), c.scene.obstacles(), {{c.p, c.q}}, c.cell_size};
    return Json{{"scenes", Json{{"counterexample", scene_json(spec)}}}};
  };
  return s;
}

// ---- convex analysis ----

Json polygon_fragment(const ConvexPolygon& p) { return Json{{"polygons", Json{{"counterexample", polygon_json(p)}}}}; }

std::vector<ConvexPolygon> drop_one_vertex(const ConvexPolygon& p, const std::function<bool(const ConvexPolygon&)>& keep) {
  std::vector<ConvexPolygon> out;
  if (p.size() <= 3) return out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<Point2> rest;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j != i) rest.push_back(p.vertex(j));
    }
    try {
      ConvexPolygon smaller(rest);
      if (keep(smaller)) out.push_back(smaller);
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

std::unique_ptr<Suite> thm51() {
  auto s = std::make_unique<TypedSuite<ConvexPolygon>>();
  s->description = "obtuse polygons pass the staircase certificate";
  s->generate = random_obtuse_polygon;
  s->check = [](const ConvexPolygon& p) {
    if (!is_obtuse_body(p)) return CaseOutcome::skip("not obtuse");
    const ConvexCertificate c = is_staircase_connected_convex(p);
    return c.staircase_connected ? CaseOutcome::pass() : CaseOutcome::fail("certificate fails at " + str(*c.violating_vertex));
  };
  s->shrink = [](const ConvexPolygon& p) { return drop_one_vertex(p, is_obtuse_body); };
  s->serialize = polygon_fragment;
  return s;
}

// Similarity taking a to the origin and b - a onto the positive x axis,
// optionally followed by a quarter turn.
AffineMap chord_map(const Point2& a, const Point2& b, bool vertical) {
  const Vec2 d = b - a;
  AffineMap m{d.x, d.y, -d.y, d.x, 0, 0};
  if (vertical) m = {d.y, -d.x, d.x, d.y, 0, 0};
  m.tx = -(m.a * a.x + m.b * a.y);
  m.ty = -(m.c * a.x + m.d * a.y);
  return m;
}

std::unique_ptr<Suite> thm52() {
  auto s = std::make_unique<TypedSuite<ConvexPolygon>>();
  s->description = "an axis-parallel chord between two non-obtuse vertices certifies the polygon";
  s->generate = [](Rng& rng) { return random_convex_polygon(rng); };
  s->check = [](const ConvexPolygon& p) {
    const std::vector<Point2> v = non_obtuse_vertices(p);
    if (v.size() < 2) return CaseOutcome::skip("fewer than two non-obtuse vertices");
    for (const Point2& a : v) {
      for (const Point2& b : v) {
        if (a == b) continue;
        for (bool vertical : {false, true}) {
          const ConvexPolygon q = chord_map(a, b, vertical).apply(p);
          if (!is_staircase_connected_convex(q).staircase_connected) {
            return CaseOutcome::fail("chord " + str(a) + " " + str(b) + " made axis-parallel, certificate fails");
          }
        }
      }
    }
    return CaseOutcome::pass();
  };
  s->shrink = [](const ConvexPolygon& p) {
    return drop_one_vertex(p, [](const ConvexPolygon& q) { return non_obtuse_vertices(q).size() >= 2; });
  };
  s->serialize = polygon_fragment;
  return s;
}

std::unique_ptr<Suite> thm53() {
  auto s = std::make_unique<TypedSuite<ConvexPolygon>>();
  s->description = "rotate_to_staircase output passes the certificate";
  s->generate = [](Rng& rng) { return random_convex_polygon(rng); };
  s->check = [](const ConvexPolygon& p) {
    const Rotation r = rotate_to_staircase(p);
    if (!r.map.is_similarity()) return CaseOutcome::fail("map is not a rotation with scaling");
    if (!(r.map.apply(p) == r.polygon)) return CaseOutcome::fail("returned polygon is not the image");
    const ConvexCertificate c = is_staircase_connected_convex(r.polygon);
    return c.staircase_connected ? CaseOutcome::pass() : CaseOutcome::fail("rotated polygon fails at " + str(*c.violating_vertex));
  };
  s->shrink = [](const ConvexPolygon& p) { return drop_one_vertex(p, [](const ConvexPolygon&) { return true; }); };
  s->serialize = polygon_fragment;
  return s;
}

Json polygons_fragment(const std::vector<ConvexPolygon>& ps) {
  Json named = Json::object();
  for (std::size_t i = 0; i < ps.size(); ++i) named["p" + std::to_string(i)] = polygon_json(ps[i]);
  return Json{{"polygons", named}};
}

std::vector<std::vector<ConvexPolygon>> drop_one_polygon(const std::vector<ConvexPolygon>& ps) {
  std::vector<std::vector<ConvexPolygon>> out;
  if (ps.size() <= 1) return out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<ConvexPolygon> rest;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (j != i) rest.push_back(ps[j]);
    }
    out.push_back(rest);
  }
  return out;
}

std::unique_ptr<Suite> thm55() {
  auto s = std::make_unique<TypedSuite<std::vector<ConvexPolygon>>>();
  s->description = "the hull of finitely many obtuse polygons is obtuse and certified";
  s->generate = [](Rng& rng) {
    std::vector<ConvexPolygon> ps;
    const long k = pick(rng, 1, 4);
    for (long i = 0; i < k; ++i) ps.push_back(random_obtuse_polygon(rng));
    return ps;
  };
  s->check = [](const std::vector<ConvexPolygon>& ps) {
    return check_hull_obtuse(ps) ? CaseOutcome::pass() : CaseOutcome::fail("hull is not obtuse or not certified");
  };
  s->shrink = drop_one_polygon;
  s->serialize = polygons_fragment;
  return s;
}

std::unique_ptr<Suite> thm54() {
  auto s = std::make_unique<TypedSuite<std::vector<ConvexPolygon>>>();
  s->description = "a connected union of obtuse polygons rasterizes to a 4-connected grid at two resolutions";
  s->generate = [](Rng& rng) {
    std::vector<ConvexPolygon> ps{random_obtuse_polygon(rng)};
    const long k = pick(rng, 1, 3);
    while (static_cast<long>(ps.size()) <= k) {
      const ConvexPolygon& last = ps.back();
      const Point2 anchor = last.vertex(static_cast<std::size_t>(pick(rng, 0, static_cast<long>(last.size()) - 1)));
      const ConvexPolygon next = random_obtuse_polygon(rng);
      // Translate so the new polygon's centroid-ish corner sits on the anchor.
      const Box& b = next.bounds();
      const Point2 mid{(b.xmin + b.xmax) / 2, (b.ymin + b.ymax) / 2};
      std::vector<Point2> moved;
      for (const Point2& v : next.vertices()) moved.push_back(v + (anchor - mid));
      ps.emplace_back(moved);
    }
    return ps;
  };
  s->check = [](const std::vector<ConvexPolygon>& ps) {
    const UnionConnectivity u = union_orthogonal_connectivity_check(ps, Scalar(1));
    if (u.connected()) return CaseOutcome::pass();
    return CaseOutcome::fail(std::string("rasterized union disconnected at ") + (u.coarse_connected ? "fine" : "coarse") +
                             " resolution");
  };
  s->serialize = polygons_fragment;
  return s;
}

std::unique_ptr<Suite> thm71() {
  auto s = std::make_unique<TypedSuite<ConvexPolygon>>();
  s->description = "s-extreme points are exactly the vertices with a degenerate axis chord";
  s->generate = [](Rng& rng) { return random_convex_polygon(rng); };
  s->check = [](const ConvexPolygon& p) {
    const std::vector<ExtremePoint> extremes = s_extreme_points(p);
    for (const Point2& v : p.vertices()) {
      const bool h0 = horizontal_chord_length(p, v) == 0;
      const bool v0 = vertical_chord_length(p, v) == 0;
      const auto it = std::find_if(extremes.begin(), extremes.end(), [&](const ExtremePoint& e) { return e.point == v; });
      if ((h0 || v0) != (it != extremes.end())) return CaseOutcome::fail("extreme set mismatch at " + str(v));
      if (it != extremes.end()) {
        const ExtremeReason want = h0 && v0 ? ExtremeReason::Both : h0 ? ExtremeReason::Hw0 : ExtremeReason::Vw0;
        if (it->reason != want) return CaseOutcome::fail("wrong reason at " + str(v));
        continue;
      }
      const auto path = staircase_through_vertex(p, v);
      if (!path) return CaseOutcome::fail("no staircase through " + str(v));
      const auto& pts = path->vertices();
      const bool ok = path->link_count() == 2 && path->is_staircase() && pts[1] == v &&
                      p.contains(pts[0], Region::Closed) && p.contains(pts[2], Region::Closed);
      if (!ok) return CaseOutcome::fail("staircase through " + str(v) + " does not verify");
    }
    return CaseOutcome::pass();
  };
  s->shrink = [](const ConvexPolygon& p) { return drop_one_vertex(p, [](const ConvexPolygon&) { return true; }); };
  s->serialize = polygon_fragment;
  return s;
}

std::unique_ptr<Suite> invariance() {
  struct Moved {
    ConvexPolygon polygon;
    Vec2 shift;
    Scalar scale;
  };
  auto s = std::make_unique<TypedSuite<Moved>>();
  s->description = "the convex certificate is invariant under translation and positive scaling";
  s->generate = [](Rng& rng) {
    return Moved{random_convex_polygon(rng), {random_rational(rng, -50, 50, 4), random_rational(rng, -50, 50, 4)},
                 ratio(pick(rng, 1, 12), 4)};
  };
  s->check = [](const Moved& m) {
    const AffineMap t{m.scale, 0, 0, m.scale, m.shift.x, m.shift.y};
    const bool before = is_staircase_connected_convex(m.polygon).staircase_connected;
    const bool after = is_staircase_connected_convex(t.apply(m.polygon)).staircase_connected;
    return before == after ? CaseOutcome::pass() : CaseOutcome::fail("certificate changed under the map");
  };
  s->serialize = [](const Moved& m) { return polygon_fragment(m.polygon); };
  return s;
}

// ---- rectangle complexes ----

Json complex_fragment(const RectComplex& c) { return Json{{"complexes", Json{{"counterexample", complex_json(c)}}}}; }

std::vector<RectComplex> drop_one_rect(const RectComplex& c) {
  std::vector<RectComplex> out;
  const auto& rs = c.rects();
  if (rs.size() <= 1) return out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    std::vector<Rect> rest;
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (j != i) rest.push_back(rs[j]);
    }
    RectComplex smaller(rest);
    if (is_connected(smaller)) out.push_back(smaller);
  }
  return out;
}

std::unique_ptr<Suite> rect_oracle() {
  auto s = std::make_unique<TypedSuite<RectComplex>>();
  s->description = "exact staircase decision on rectangle complexes equals the arrangement oracle";
  s->generate = [](Rng& rng) { return random_connected_complex(rng, 8); };
  s->check = [](const RectComplex& c) {
    const StaircaseCertificate cert = is_staircase_connected_exact(c);
    const bool oracle = staircase_oracle_all_pairs(c);
    if (cert.staircase_connected == oracle) return CaseOutcome::pass();
    return CaseOutcome::fail("exact = " + std::to_string(cert.staircase_connected) + " (" +
                             std::string(to_string(cert.clause)) + "), oracle = " + std::to_string(oracle));
  };
  s->shrink = drop_one_rect;
  s->serialize = complex_fragment;
  return s;
}

// Same point set, different rectangle list: halves plus one duplicate.
RectComplex repartition(const RectComplex& c) {
  std::vector<Rect> out;
  for (const Rect& r : c.rects()) {
    if (r.xmin < r.xmax) {
      const Scalar mid = (r.xmin + r.xmax) / 2;
      out.push_back({r.xmin, r.ymin, mid, r.ymax});
      out.push_back({mid, r.ymin, r.xmax, r.ymax});
    } else if (r.ymin < r.ymax) {
      const Scalar mid = (r.ymin + r.ymax) / 2;
      out.push_back({r.xmin, r.ymin, r.xmax, mid});
      out.push_back({r.xmin, mid, r.xmax, r.ymax});
    } else {
      out.push_back(r);
    }
  }
  out.push_back(c.rects().front());
  std::reverse(out.begin(), out.end());
  return RectComplex(std::move(out));
}

std::unique_ptr<Suite> rect_repartition() {
  auto s = std::make_unique<TypedSuite<RectComplex>>();
  s->description = "widths and the exact verdict do not depend on how the complex is partitioned";
  s->generate = [](Rng& rng) { return random_connected_complex(rng, 8); };
  s->check = [](const RectComplex& c) {
    const RectComplex other = repartition(c);
    const Arrangement arr(c);
    for (const Point2& v : arr.vertices_in_complex()) {
      if (hw_at(c, v) != hw_at(other, v) || vw_at(c, v) != vw_at(other, v)) {
        return CaseOutcome::fail("width differs at " + str(v));
      }
    }
    if (is_staircase_connected_exact(c).staircase_connected != is_staircase_connected_exact(other).staircase_connected) {
      return CaseOutcome::fail("exact verdict differs");
    }
    return CaseOutcome::pass();
  };
  s->shrink = drop_one_rect;
  s->serialize = complex_fragment;
  return s;
}

constexpr int kNormalDraws = 200;

std::unique_ptr<Suite> thm61_strict() {
  struct Draw {
    std::optional<RectComplex> normal;
    RectComplex last;
  };
  auto s = std::make_unique<TypedSuite<Draw>>();
  s->description = "normal, vertically convex complexes: staircase connected iff f+ and -f- are unimodal";
  s->generate = [](Rng& rng) {
    RectComplex c = random_column_complex(rng);
    for (int i = 0; i < kNormalDraws; ++i) {
      if (associated_profiles(c).normal) return Draw{c, c};
      if (i + 1 < kNormalDraws) c = random_column_complex(rng);
    }
    return Draw{std::nullopt, c};
  };
  s->check = [](const Draw& d) {
    if (!d.normal) {
      return CaseOutcome::fail("no normal instance in " + std::to_string(kNormalDraws) +
                               " draws: the end edges of a union of non-degenerate rectangles have positive length");
    }
    const UnimodalCheck u = thm_unimodal_check(*d.normal, HypothesisPolicy::Strict);
    return u.agree ? CaseOutcome::pass() : CaseOutcome::fail("lhs and rhs disagree");
  };
  s->serialize = [](const Draw& d) { return complex_fragment(d.normal ? *d.normal : d.last); };
  return s;
}

std::unique_ptr<Suite> thm61_relaxed() {
  auto s = std::make_unique<TypedSuite<RectComplex>>();
  s->description = "as thm61-unimodal with the normality hypothesis waived";
  s->generate = random_column_complex;
  s->check = [](const RectComplex& c) {
    const UnimodalCheck u = thm_unimodal_check(c, HypothesisPolicy::WaiveNormality);
    if (u.agree) return CaseOutcome::pass();
    return CaseOutcome::fail("staircase = " + std::to_string(u.lhs) + ", unimodal = " + std::to_string(u.rhs));
  };
  s->shrink = [](const RectComplex& c) {
    std::vector<RectComplex> out;
    for (RectComplex& smaller : drop_one_rect(c)) {
      if (is_vertically_convex_exact(smaller)) out.push_back(smaller);
    }
    return out;
  };
  s->serialize = complex_fragment;
  return s;
}

using Registry = std::map<std::string, std::unique_ptr<Suite>>;

const Registry& registry() {
  static const Registry r = [] {
    Registry m;
    m["lemma41-equivalence"] = lemma41();
    m["thm42-no-bounded-complement"] = thm42();
    m["greedy-completeness"] = greedy();
    m["sdistance-properties"] = sdistance();
    m["thm31-linkbound"] = thm31();
    m["escape-dirs"] = escape();
    m["thm33-carve"] = thm33();
    m["thm34-multi-route"] = thm34();
    m["thm51-obtuse"] = thm51();
    m["thm52-axis-chord"] = thm52();
    m["thm53-rotate"] = thm53();
    m["thm54-union"] = thm54();
    m["thm55-hull"] = thm55();
    m["thm61-unimodal"] = thm61_strict();
    m["thm61-unimodal-relaxed"] = thm61_relaxed();
    m["thm71-extreme"] = thm71();
    m["rect-oracle"] = rect_oracle();
    m["rect-repartition"] = rect_repartition();
    m["certificate-invariance"] = invariance();
    return m;
  }();
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, suite] : registry()) out.push_back(name);
  return out;
}

bool has_suite(const std::string& name) { return registry().count(name) > 0; }

std::string suite_description(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown suite '" + name + "'");
  return it->second->description;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int n, int threads) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown suite '" + name + "'");
  if (n < 1) throw PreconditionError("suite size must be positive");
  const Suite& suite = *it->second;
  if (threads <= 0) threads = default_threads();
  threads = std::min(threads, n);
  std::vector<CaseOutcome> outcomes(static_cast<std::size_t>(n));
  auto work = [&](int shard) {
    for (int i = shard; i < n; i += threads) {
      outcomes[static_cast<std::size_t>(i)] = suite.run(case_seed(seed, static_cast<std::uint64_t>(i)));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (std::thread& t : pool) t.join();
  }
  SuiteReport report;
  report.suite = name;
  report.seed = seed;
  report.n = n;
  for (int i = 0; i < n; ++i) {
    switch (outcomes[static_cast<std::size_t>(i)].kind) {
      case CaseOutcome::Kind::Pass: ++report.passed; break;
      case CaseOutcome::Kind::Skip: ++report.skipped; break;
      case CaseOutcome::Kind::Fail:
        ++report.failed;
        if (!report.first_failure) report.first_failure = i;
        break;
    }
  }
  if (report.first_failure) {
    auto [fragment, detail] = suite.minimize(case_seed(seed, static_cast<std::uint64_t>(*report.first_failure)));
    report.counterexample = std::move(fragment);
    report.failure_detail = std::move(detail);
  }
  return report;
}

}  // namespace staircase
