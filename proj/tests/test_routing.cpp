#include <doctest.h>

#include <algorithm>

#include "staircase/generators.hpp"
#include "staircase/grid.hpp"
#include "staircase/routing.hpp"
#include "test_util.hpp"

using namespace staircase;
using namespace staircase::test;

namespace {

std::vector<Direction> dirs(std::initializer_list<Direction> d) { return d; }

Box box(long x0, long y0, long x1, long y1) { return {Scalar(x0), Scalar(y0), Scalar(x1), Scalar(y1)}; }

ConvexPolygon square(long x, long y, long side) {
  return poly({{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}});
}

}  // namespace

TEST_CASE("escape directions") {
  const ConvexPolygon sq = unit_square();
  CHECK(escape_dirs(P("-1", "1/2"), sq) == dirs({Direction::North, Direction::West, Direction::South}));
  CHECK(escape_dirs(P(-1, -1), sq).size() == 4);
  CHECK(escape_dirs(P("0", "1/2"), sq) == dirs({Direction::North, Direction::West, Direction::South}));
  CHECK_THROWS_AS(escape_dirs(P("1/2", "1/2"), sq), PreconditionError);
}

TEST_CASE("routes around the unit square") {
  const ConvexPolygon sq = unit_square();
  const std::vector<ConvexPolygon> obstacles{sq};
  const RouteResult over = route_around_convex(P("-1", "1/2"), P("2", "1/2"), sq);
  CHECK(over.links == 3);
  CHECK(over.verified);
  CHECK(over.case_tag == RouteCase::SharedDirection);
  CHECK(path_avoids(over.path, obstacles));
  const RouteResult corner = route_around_convex(P(-1, -1), P(2, 2), sq);
  CHECK(corner.links == 2);
  CHECK(corner.case_tag == RouteCase::LCorner);
  const RouteResult direct = route_around_convex(P(-1, -1), P(-1, 3), sq);
  CHECK(direct.links == 1);
  CHECK(direct.case_tag == RouteCase::Direct);
  // Touching the boundary is allowed.
  const RouteResult along = route_around_convex(P(0, -1), P(0, 2), sq);
  CHECK(along.links == 1);
  CHECK_THROWS_AS(route_around_convex(P("1/2", "1/2"), P(3, 3), sq), PreconditionError);
  CHECK_THROWS_AS(route_around_convex(P(3, 3), P(3, 3), sq), PreconditionError);
}

TEST_CASE("routes around random polygons stay within four links") {
  Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    const ConvexPolygon p = random_convex_polygon(rng);
    const std::vector<ConvexPolygon> obstacles{p};
    for (int j = 0; j < 25; ++j) {
      const Point2 a = random_exterior_point(rng, p), b = random_exterior_point(rng, p);
      if (a == b) continue;
      const RouteResult r = route_around_convex(a, b, p);
      CHECK(r.links <= 4);
      CHECK(r.links == r.path.link_count());
      CHECK(r.verified);
      CHECK(path_avoids(r.path, obstacles));
      CHECK(r.path.front() == a);
      CHECK(r.path.back() == b);
    }
  }
}

TEST_CASE("path verification") {
  const RoutingScene scene(box(-3, -3, 4, 4), {unit_square()});
  CHECK_FALSE(verify_path(OrthoPath::through({P("-1", "1/2"), P("2", "1/2")}), scene));
  CHECK(verify_path(OrthoPath::through({P(-1, 0), P(2, 0)}), scene));
  CHECK(verify_path(OrthoPath::through({P(-1, 1), P(0, 1), P(0, 2)}), scene));
  CHECK_FALSE(verify_path(OrthoPath::through({P(-1, 2), P(9, 2)}), scene));
}

TEST_CASE("scene validation") {
  CHECK_THROWS_AS(RoutingScene(box(-3, -3, 4, 4), {unit_square(), square(1, 0, 1)}), PreconditionError);
  CHECK_THROWS_AS(RoutingScene(box(0, 0, 1, 1), {unit_square()}), PreconditionError);
  CHECK_THROWS_AS(RoutingScene(box(0, 0, 0, 5), {}), PreconditionError);
  CHECK_NOTHROW(RoutingScene(box(0, 0, 5, 5), {}));
}

TEST_CASE("grid-backed routing") {
  const RoutingScene empty(box(0, 0, 10, 10), {});
  const MultiRoute free = route_multi(empty, P(1, 1), P(9, 7), Scalar(1));
  REQUIRE_FALSE(free.exhausted());
  CHECK(free.route->links <= 2);
  CHECK(free.route->verified);

  const RoutingScene one(box(-8, -8, 12, 12), {square(0, 0, 4)});
  const MultiRoute around = route_multi(one, P(-1, 2), P(5, 2), Scalar(1));
  REQUIRE_FALSE(around.exhausted());
  CHECK(around.route->links == 3);
  CHECK(verify_path(around.route->path, one));
  CHECK(around.trace.size() == 1);
  CHECK(around.trace.front().found);
}

TEST_CASE("refinement keeps routes valid") {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    const MultiRouteCase c = random_multi_route_case(rng);
    const MultiRoute coarse = route_multi(c.scene, c.p, c.q, c.cell_size);
    REQUIRE_FALSE(coarse.exhausted());
    CHECK(verify_path(coarse.route->path, c.scene));
    const MultiRoute fine = route_multi(c.scene, c.p, c.q, c.cell_size / 2);
    REQUIRE_FALSE(fine.exhausted());
    CHECK(verify_path(fine.route->path, c.scene));
    // The finer lattice contains the coarser one.
    CHECK(fine.route->links <= coarse.route->links);
  }
}

TEST_CASE("free-space cells around one obstacle have link diameter at most four") {
  Rng rng(5);
  for (int i = 0; i < 12; ++i) {
    const ConvexPolygon p = random_lattice_polygon(rng, 0, 8);
    const long margin = 20;
    std::vector<Cell> free;
    for (long x = -margin; x < 8 + margin; ++x) {
      for (long y = -margin; y < 8 + margin; ++y) {
        if (!polygons_intersect(p, square(x, y, 1))) free.push_back({static_cast<int>(x), static_cast<int>(y)});
      }
    }
    const GridSet g = GridSet::from_cells(free);
    for (int t = 0; t < 40; ++t) {
      const Cell a = free[rng() % free.size()], b = free[rng() % free.size()];
      const bool inner = std::min({a.col, a.row, b.col, b.row}) >= -margin + 2 &&
                         std::max({a.col, a.row, b.col, b.row}) < 8 + margin - 2;
      if (!inner) continue;
      const auto d = s_distance(g, a, b);
      REQUIRE(d);
      CHECK(d->links <= 4);
    }
  }
}

TEST_CASE("carving a convex polygon out of a region") {
  std::vector<std::string> rows(10, std::string(10, '#'));
  const GridSet block = GridSet::from_rows(rows, {0, 0});
  CHECK(carve_check(block, square(4, 4, 2), Scalar(1)));
  CHECK(carve_check(block, poly({{5, 2}, {8, 5}, {5, 8}, {2, 5}}), Scalar(1)));
  CHECK_THROWS_AS(carve_check(block, square(0, 0, 3), Scalar(1)), PreconditionError);
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    const CarveCase c = random_carve_case(rng);
    CHECK(carve_check(c.region, c.polygon, c.cell_size));
  }
}
