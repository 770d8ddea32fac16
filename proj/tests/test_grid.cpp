#include <doctest.h>

#include <deque>
#include <map>
#include <set>

#include "staircase/generators.hpp"
#include "staircase/grid.hpp"
#include "test_util.hpp"

using namespace staircase;
using namespace staircase::test;

namespace {

GridSet rows(std::vector<std::string> r) { return GridSet::from_rows(r, {0, 0}); }

GridSet full(int w, int h) { return rows(std::vector<std::string>(static_cast<std::size_t>(h), std::string(static_cast<std::size_t>(w), '#'))); }

const GridSet kU = rows({"#.#", "###"});
const GridSet kPlus = rows({".#.", "###", ".#."});

// Independent oracles: plain searches written without the library helpers.

bool brute_convex(const GridSet& g) {
  const std::vector<Cell> cells = g.cells();
  for (const Cell& a : cells) {
    for (const Cell& b : cells) {
      if (a.row == b.row) {
        for (int x = std::min(a.col, b.col); x <= std::max(a.col, b.col); ++x) {
          if (!g.contains({x, a.row})) return false;
        }
      }
      if (a.col == b.col) {
        for (int y = std::min(a.row, b.row); y <= std::max(a.row, b.row); ++y) {
          if (!g.contains({a.col, y})) return false;
        }
      }
    }
  }
  return true;
}

bool brute_monotone(const GridSet& g, Cell a, Cell b) {
  const int sx = b.col >= a.col ? 1 : -1, sy = b.row >= a.row ? 1 : -1;
  std::set<std::pair<int, int>> seen;
  std::vector<Cell> stack{a};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    if (!g.contains(c) || !seen.insert({c.col, c.row}).second) continue;
    if (c == b) return true;
    if (c.col != b.col) stack.push_back({c.col + sx, c.row});
    if (c.row != b.row) stack.push_back({c.col, c.row + sy});
  }
  return false;
}

bool brute_staircase(const GridSet& g) {
  for (const Cell& a : g.cells()) {
    for (const Cell& b : g.cells()) {
      if (!brute_monotone(g, a, b)) return false;
    }
  }
  return true;
}

// Minimum links by breadth-first search over maximal straight moves.
std::optional<int> brute_links(const GridSet& g, Cell a, Cell b) {
  if (a == b) return 0;
  std::map<std::pair<int, int>, int> dist{{{a.col, a.row}, 0}};
  std::deque<Cell> queue{a};
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    const int d = dist[{c.col, c.row}];
    for (Direction dir : kDirections) {
      Cell n{c.col + step_x(dir), c.row + step_y(dir)};
      while (g.contains(n)) {
        if (!dist.count({n.col, n.row})) {
          dist[{n.col, n.row}] = d + 1;
          if (n == b) return d + 1;
          queue.push_back(n);
        }
        n = {n.col + step_x(dir), n.row + step_y(dir)};
      }
    }
  }
  return std::nullopt;
}

bool witness_ok(const GridSet& g, const OrthoPath& w, Cell a, Cell b) {
  if (!(w.front() == to_point(a)) || !(w.back() == to_point(b))) return false;
  const auto& v = w.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Direction d = w.edge_direction(i);
    Point2 p = v[i];
    while (!(p == v[i + 1])) {
      if (!g.contains({static_cast<int>(p.x.get_num().get_si()), static_cast<int>(p.y.get_num().get_si())})) return false;
      p = p + unit_vector(d);
    }
  }
  return g.contains(b);
}

}  // namespace

TEST_CASE("text format") {
  CHECK(kU.to_rows() == std::vector<std::string>{"#.#", "###"});
  CHECK(kU.contains({0, 1}));
  CHECK_FALSE(kU.contains({1, 1}));
  CHECK(kU.cell_count() == 5);
  const GridSet shifted = GridSet::from_rows({"##"}, {-3, 4});
  CHECK(shifted.contains({-3, 4}));
  CHECK(shifted.contains({-2, 4}));
  CHECK_THROWS_AS(rows({"#.", "#"}), PreconditionError);
  CHECK_THROWS_AS(rows({"#x"}), PreconditionError);
  CHECK_THROWS_AS(rows({"..", "#."}), PreconditionError);
  CHECK_THROWS_AS(rows({}), PreconditionError);
  CHECK(GridSet::from_cells(kU.cells()) == kU);
}

TEST_CASE("orthogonal connectivity") {
  CHECK(is_orthogonally_connected(full(3, 3)));
  CHECK_FALSE(is_orthogonally_connected(rows({"#.", ".#"})));
  CHECK(is_orthogonally_connected(kU));
}

TEST_CASE("orthogonal convexity") {
  CHECK(is_orthogonally_convex(full(4, 2)));
  CHECK_FALSE(is_orthogonally_convex(kU));
  CHECK(is_orthogonally_convex(rows({"##.", ".##"})));
}

TEST_CASE("staircase connectivity") {
  CHECK(is_staircase_connected(full(3, 5)));
  CHECK_FALSE(is_staircase_connected(kU));
  CHECK(is_staircase_connected(kPlus));
}

TEST_CASE("monotone paths") {
  CHECK(monotone_path_exists(kU, {0, 0}, {0, 0}));
  CHECK(monotone_path_exists(full(4, 3), {0, 0}, {3, 2}));
  CHECK(monotone_path_exists(full(4, 3), {3, 0}, {0, 2}));
  CHECK_FALSE(monotone_path_exists(kU, {0, 1}, {2, 1}));
}

TEST_CASE("widths") {
  const GridSet row5 = full(5, 1);
  CHECK(hw(row5, {2, 0}) == 5);
  CHECK(vw(row5, {2, 0}) == 1);
  CHECK(hw(kPlus, {1, 1}) == 3);
  CHECK(vw(kPlus, {1, 1}) == 3);
  CHECK(hw(kPlus, {1, 2}) == 1);
  CHECK(vw(kPlus, {1, 2}) == 3);
}

TEST_CASE("s-distance examples") {
  const GridSet r = full(4, 3);
  CHECK(s_distance(r, {0, 1}, {3, 1})->links == 1);
  CHECK(s_distance(r, {0, 0}, {3, 2})->links == 2);
  CHECK(s_distance(kU, {0, 1}, {2, 1})->links == 3);
  CHECK(s_distance(kU, {2, 0}, {2, 0})->links == 0);
  CHECK_FALSE(s_distance(rows({"#.#"}), {0, 0}, {2, 0}));
  // Witness tie-break: equal links and length, East before North.
  const auto d = s_distance(full(3, 3), {0, 0}, {2, 2});
  REQUIRE(d);
  CHECK(d->witness.vertices() == std::vector<Point2>{P(0, 0), P(2, 0), P(2, 2)});
}

TEST_CASE("s-diameter examples") {
  CHECK(s_diameter(full(2, 2)) == 2);
  CHECK(s_diameter(full(5, 4)) == 2);
  CHECK(s_diameter(full(6, 1)) == 1);
  CHECK(s_diameter(kU) == 3);
  CHECK(s_diameter(rows({"#"})) == 0);
  CHECK_THROWS(s_diameter(rows({"#.#"})));
}

TEST_CASE("greedy staircase examples") {
  const GreedyOutcome corners = greedy_staircase(full(4, 3), {0, 0}, {3, 2});
  CHECK(corners.success);
  CHECK(corners.path.link_count() == 2);
  const GreedyOutcome arms = greedy_staircase(kPlus, {0, 1}, {1, 2});
  CHECK(arms.success);
  CHECK(arms.path.vertices() == std::vector<Point2>{P(0, 1), P(1, 1), P(1, 2)});
  const GreedyOutcome blocked = greedy_staircase(kU, {0, 1}, {2, 1});
  CHECK_FALSE(blocked.success);
  CHECK(blocked.blocked_at.has_value());
}

TEST_CASE("bounded complement components") {
  CHECK(bounded_complement_components(full(3, 2)) == 0);
  CHECK(bounded_complement_components(rows({"###", "#.#", "###"})) == 1);
  CHECK(bounded_complement_components(rows({"#####", "#.#.#", "#####"})) == 2);
  CHECK(bounded_complement_components(kPlus) == 0);
  CHECK(bounded_complement_components(kU) == 0);
}

TEST_CASE("rasterization") {
  const GridSet one = rasterize_convex(unit_square(), Scalar(1));
  CHECK(one.cell_count() == 1);
  const GridSet diamond = rasterize_convex(poly({{4, 0}, {0, 4}, {-4, 0}, {0, -4}}), Scalar(1));
  CHECK(is_orthogonally_convex(diamond));
  CHECK(is_staircase_connected(diamond));
  CHECK(diamond.width() == diamond.height());
  CHECK_THROWS_AS(rasterize_convex(poly({{0, 0}, {1, 0}, {0, 1}}), Scalar(10)), EmptyRasterization);
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const ConvexPolygon p = random_convex_polygon(rng);
    std::optional<GridSet> g;
    try {
      g = rasterize_convex(p, Scalar(4));
    } catch (const EmptyRasterization&) {
      continue;
    }
    CHECK(is_orthogonally_convex(*g));
  }
}

TEST_CASE("random staircase grids") {
  const GridSet single = random_staircase_grid(1, 1, 1);
  CHECK(single.cell_count() == 1);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const GridSet g = random_staircase_grid(seed, 1 + static_cast<int>(seed % 13), 1 + static_cast<int>(seed % 7));
    CHECK(is_staircase_connected(g));
    CHECK(g == random_staircase_grid(seed, 1 + static_cast<int>(seed % 13), 1 + static_cast<int>(seed % 7)));
  }
  CHECK(random_grid(9, 12, 12, 0.5) == random_grid(9, 12, 12, 0.5));
}

TEST_CASE("predicates agree with brute-force oracles") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const GridSet g = random_grid(seed, 1 + static_cast<int>(seed % 7), 1 + static_cast<int>((seed / 7) % 6), 0.6);
    CHECK(is_orthogonally_convex(g) == brute_convex(g));
    CHECK(is_staircase_connected(g) == brute_staircase(g));
    CHECK(all_pairs_monotone_connected(g) == brute_staircase(g));
    for (const Cell& a : g.cells()) {
      for (const Cell& b : g.cells()) CHECK(monotone_path_exists(g, a, b) == brute_monotone(g, a, b));
    }
  }
}

TEST_CASE("s-distance agrees with a straight-move search") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GridSet g = random_grid(seed, 2 + static_cast<int>(seed % 6), 2 + static_cast<int>(seed % 5), 0.65);
    for (const Cell& a : g.cells()) {
      for (const Cell& b : g.cells()) {
        const auto d = s_distance(g, a, b);
        const auto want = brute_links(g, a, b);
        REQUIRE(d.has_value() == want.has_value());
        if (d) {
          CHECK(d->links == *want);
          CHECK(d->witness.link_count() == d->links);
          CHECK(witness_ok(g, d->witness, a, b));
        }
      }
    }
  }
}

TEST_CASE("greedy succeeds exactly on staircase connected grids") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const GridSet g = random_grid(seed, 1 + static_cast<int>(seed % 6), 1 + static_cast<int>(seed % 5), 0.7);
    bool all = true;
    for (const Cell& a : g.cells()) {
      for (const Cell& b : g.cells()) {
        const GreedyOutcome out = greedy_staircase(g, a, b);
        all = all && out.success;
        if (out.success) {
          CHECK(out.path.is_staircase());
          CHECK(witness_ok(g, out.path, a, b));
        }
      }
    }
    CHECK(all == brute_staircase(g));
  }
}

TEST_CASE("largest component") {
  const GridSet g = rows({"##.#", "##.#", "....", "#..."});
  const GridSet big = largest_component(g);
  CHECK(big.cell_count() == 4);
  CHECK(is_orthogonally_connected(big));
}
