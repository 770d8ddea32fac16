#include "staircase/grid.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <random>

namespace staircase {

GridSet::GridSet(Cell origin, int width, int height)
    : origin_(origin),
      width_(width),
      height_(height),
      words_(static_cast<std::size_t>((width + 63) / 64)),
      bits_(words_ * static_cast<std::size_t>(height), 0) {}

GridSet GridSet::from_cells(std::span<const Cell> cells) {
  if (cells.empty()) throw PreconditionError("grid set must contain at least one cell");
  int cmin = cells[0].col, cmax = cells[0].col, rmin = cells[0].row, rmax = cells[0].row;
  for (const Cell& c : cells) {
    cmin = std::min(cmin, c.col);
    cmax = std::max(cmax, c.col);
    rmin = std::min(rmin, c.row);
    rmax = std::max(rmax, c.row);
  }
  GridSet g({cmin, rmin}, cmax - cmin + 1, rmax - rmin + 1);
  for (const Cell& c : cells) {
    const int x = c.col - cmin;
    const int y = c.row - rmin;
    if (!g.test(x, y)) {
      g.set(x, y);
      ++g.count_;
    }
  }
  return g;
}

GridSet GridSet::from_rows(const std::vector<std::string>& rows, Cell origin) {
  if (rows.empty() || rows[0].empty()) throw PreconditionError("grid text is empty");
  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows[0].size());
  GridSet g(origin, width, height);
  for (int i = 0; i < height; ++i) {
    const std::string& line = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(line.size()) != width) throw PreconditionError("grid rows differ in length");
    const int y = height - 1 - i;
    for (int x = 0; x < width; ++x) {
      const char ch = line[static_cast<std::size_t>(x)];
      if (ch == '#') {
        g.set(x, y);
        ++g.count_;
      } else if (ch != '.') {
        throw PreconditionError(std::string("grid text may only contain '#' and '.', found '") + ch + "'");
      }
    }
  }
  bool top = false, bottom = false, left = false, right = false;
  for (int x = 0; x < width; ++x) {
    top = top || g.test(x, height - 1);
    bottom = bottom || g.test(x, 0);
  }
  for (int y = 0; y < height; ++y) {
    left = left || g.test(0, y);
    right = right || g.test(width - 1, y);
  }
  if (!(top && bottom && left && right)) {
    throw PreconditionError("grid text must have a tight bounding box (no empty border row or column)");
  }
  return g;
}

std::vector<Cell> GridSet::cells() const {
  std::vector<Cell> out;
  out.reserve(count_);
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (test(x, y)) out.push_back({origin_.col + x, origin_.row + y});
    }
  }
  return out;
}

std::vector<std::string> GridSet::to_rows() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(height_));
  for (int y = height_ - 1; y >= 0; --y) {
    std::string line(static_cast<std::size_t>(width_), '.');
    for (int x = 0; x < width_; ++x) {
      if (test(x, y)) line[static_cast<std::size_t>(x)] = '#';
    }
    out.push_back(std::move(line));
  }
  return out;
}

namespace {

// Dense view of a grid's bounding box used by the search routines.
struct Box2 {
  int w;
  int h;
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * w + x; }
  bool inside(int x, int y) const { return x >= 0 && y >= 0 && x < w && y < h; }
};

void require_member(const GridSet& grid, Cell c, const char* what) {
  if (!grid.contains(c)) {
    throw PreconditionError(std::string(what) + " (" + std::to_string(c.col) + ", " +
                            std::to_string(c.row) + ") is not in the grid set");
  }
}

// Labels 4-connected components of the set cells; returns component count.
int label_components(const GridSet& grid, std::vector<int>& label) {
  const Box2 box{grid.width(), grid.height()};
  label.assign(static_cast<std::size_t>(box.w) * box.h, -1);
  int components = 0;
  std::vector<std::pair<int, int>> stack;
  for (int y0 = 0; y0 < box.h; ++y0) {
    for (int x0 = 0; x0 < box.w; ++x0) {
      if (!grid.test(x0, y0) || label[box.index(x0, y0)] >= 0) continue;
      label[box.index(x0, y0)] = components;
      stack.push_back({x0, y0});
      while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        for (Direction d : kDirections) {
          const int nx = x + step_x(d);
          const int ny = y + step_y(d);
          if (!box.inside(nx, ny) || !grid.test(nx, ny) || label[box.index(nx, ny)] >= 0) continue;
          label[box.index(nx, ny)] = components;
          stack.push_back({nx, ny});
        }
      }
      ++components;
    }
  }
  return components;
}

// Cells reachable from (ax, ay) by steps (sx, 0) and (0, sy) only.
// sx, sy are +1 or -1; the sweep covers the quadrant box.
void quadrant_reach(const GridSet& grid, int ax, int ay, int sx, int sy, std::vector<char>& reach) {
  const Box2 box{grid.width(), grid.height()};
  reach.assign(static_cast<std::size_t>(box.w) * box.h, 0);
  reach[box.index(ax, ay)] = 1;
  for (int y = ay; box.inside(0, y); y += sy) {
    for (int x = ax; box.inside(x, 0); x += sx) {
      if ((x == ax && y == ay) || !grid.test(x, y)) continue;
      const bool from_x = x != ax && reach[box.index(x - sx, y)];
      const bool from_y = y != ay && reach[box.index(x, y - sy)];
      reach[box.index(x, y)] = from_x || from_y;
    }
  }
}

int run_length(const GridSet& grid, Cell c, bool horizontal) {
  require_member(grid, c, "cell");
  const int x = c.col - grid.origin().col;
  const int y = c.row - grid.origin().row;
  int lo = horizontal ? x : y;
  int hi = lo;
  const int limit = horizontal ? grid.width() : grid.height();
  auto at = [&](int t) { return horizontal ? grid.test(t, y) : grid.test(x, t); };
  while (lo - 1 >= 0 && at(lo - 1)) --lo;
  while (hi + 1 < limit && at(hi + 1)) ++hi;
  return hi - lo + 1;
}

constexpr int kNoHeading = 4;
constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kLink = std::uint64_t{1} << 32;

}  // namespace

bool is_orthogonally_connected(const GridSet& grid) {
  std::vector<int> label;
  return label_components(grid, label) == 1;
}

bool is_orthogonally_convex(const GridSet& grid) {
  for (int y = 0; y < grid.height(); ++y) {
    int runs = 0;
    bool prev = false;
    for (int x = 0; x < grid.width(); ++x) {
      const bool cur = grid.test(x, y);
      if (cur && !prev) ++runs;
      prev = cur;
    }
    if (runs > 1) return false;
  }
  for (int x = 0; x < grid.width(); ++x) {
    int runs = 0;
    bool prev = false;
    for (int y = 0; y < grid.height(); ++y) {
      const bool cur = grid.test(x, y);
      if (cur && !prev) ++runs;
      prev = cur;
    }
    if (runs > 1) return false;
  }
  return true;
}

bool is_staircase_connected(const GridSet& grid) {
  return is_orthogonally_convex(grid) && is_orthogonally_connected(grid);
}

bool monotone_path_exists(const GridSet& grid, Cell a, Cell b) {
  require_member(grid, a, "cell a");
  require_member(grid, b, "cell b");
  const int ax = a.col - grid.origin().col, ay = a.row - grid.origin().row;
  const int bx = b.col - grid.origin().col, by = b.row - grid.origin().row;
  const int sx = bx >= ax ? 1 : -1;
  const int sy = by >= ay ? 1 : -1;
  std::vector<char> reach;
  quadrant_reach(grid, ax, ay, sx, sy, reach);
  return reach[Box2{grid.width(), grid.height()}.index(bx, by)] != 0;
}

bool all_pairs_monotone_connected(const GridSet& grid) {
  const Box2 box{grid.width(), grid.height()};
  std::vector<char> reach;
  for (int ay = 0; ay < box.h; ++ay) {
    for (int ax = 0; ax < box.w; ++ax) {
      if (!grid.test(ax, ay)) continue;
      for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
          quadrant_reach(grid, ax, ay, sx, sy, reach);
          for (int y = ay; box.inside(0, y); y += sy) {
            for (int x = ax; box.inside(x, 0); x += sx) {
              if (grid.test(x, y) && !reach[box.index(x, y)]) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

int hw(const GridSet& grid, Cell c) { return run_length(grid, c, true); }
int vw(const GridSet& grid, Cell c) { return run_length(grid, c, false); }

std::optional<LinkDistance> s_distance(const GridSet& grid, Cell a, Cell b) {
  require_member(grid, a, "cell a");
  require_member(grid, b, "cell b");
  const Box2 box{grid.width(), grid.height()};
  const Cell o = grid.origin();
  const int bx = b.col - o.col, by = b.row - o.row;
  const std::size_t cells = static_cast<std::size_t>(box.w) * box.h;

  // Cost-to-go to b, packed as links * 2^32 + steps, per (cell, heading).
  std::vector<std::uint64_t> togo(cells * 5, kInfinity);
  using Entry = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (int h = 0; h < 5; ++h) {
    const std::size_t s = box.index(bx, by) * 5 + h;
    togo[s] = 0;
    queue.push({0, s});
  }
  while (!queue.empty()) {
    const auto [cost, state] = queue.top();
    queue.pop();
    if (cost != togo[state]) continue;
    const int heading = static_cast<int>(state % 5);
    if (heading == kNoHeading) continue;
    const std::size_t cell = state / 5;
    const int x = static_cast<int>(cell % box.w);
    const int y = static_cast<int>(cell / box.w);
    const Direction d = static_cast<Direction>(heading);
    const int px = x - step_x(d), py = y - step_y(d);
    if (!box.inside(px, py) || !grid.test(px, py)) continue;
    for (int h = 0; h < 5; ++h) {
      const std::uint64_t next = cost + 1 + (h == heading ? 0 : kLink);
      const std::size_t s = box.index(px, py) * 5 + h;
      if (next < togo[s]) {
        togo[s] = next;
        queue.push({next, s});
      }
    }
  }

  int x = a.col - o.col, y = a.row - o.row;
  int heading = kNoHeading;
  std::uint64_t remaining = togo[box.index(x, y) * 5 + heading];
  if (remaining == kInfinity) return std::nullopt;
  const int links = static_cast<int>(remaining >> 32);
  std::vector<Point2> points{to_point(a)};
  while (x != bx || y != by) {
    bool moved = false;
    for (Direction d : kDirections) {
      const int nx = x + step_x(d), ny = y + step_y(d);
      if (!box.inside(nx, ny) || !grid.test(nx, ny)) continue;
      const int h = static_cast<int>(d);
      const std::uint64_t via = togo[box.index(nx, ny) * 5 + h];
      if (via == kInfinity) continue;
      if (via + 1 + (h == heading ? 0 : kLink) == remaining) {
        x = nx;
        y = ny;
        heading = h;
        remaining = via;
        points.push_back(to_point({o.col + x, o.row + y}));
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("s_distance: witness reconstruction lost the optimal path");
  }
  return LinkDistance{links, OrthoPath::through(points)};
}

int s_diameter(const GridSet& grid) {
  if (!is_orthogonally_connected(grid)) {
    throw PreconditionError("s_diameter requires an orthogonally connected grid set");
  }
  const Box2 box{grid.width(), grid.height()};
  const std::size_t cells = static_cast<std::size_t>(box.w) * box.h;
  constexpr int kUnseen = std::numeric_limits<int>::max();
  std::vector<int> dist(cells * 5);
  std::deque<std::size_t> queue;
  int diameter = 0;
  for (int ay = 0; ay < box.h; ++ay) {
    for (int ax = 0; ax < box.w; ++ax) {
      if (!grid.test(ax, ay)) continue;
      std::fill(dist.begin(), dist.end(), kUnseen);
      const std::size_t start = box.index(ax, ay) * 5 + kNoHeading;
      dist[start] = 0;
      queue.push_back(start);
      while (!queue.empty()) {
        const std::size_t s = queue.front();
        queue.pop_front();
        const int heading = static_cast<int>(s % 5);
        const std::size_t cell = s / 5;
        const int x = static_cast<int>(cell % box.w);
        const int y = static_cast<int>(cell / box.w);
        for (Direction d : kDirections) {
          const int nx = x + step_x(d), ny = y + step_y(d);
          if (!box.inside(nx, ny) || !grid.test(nx, ny)) continue;
          const int h = static_cast<int>(d);
          const int w = h == heading ? 0 : 1;
          const std::size_t t = box.index(nx, ny) * 5 + h;
          if (dist[s] + w < dist[t]) {
            dist[t] = dist[s] + w;
            if (w == 0) {
              queue.push_front(t);
            } else {
              queue.push_back(t);
            }
          }
        }
      }
      for (std::size_t c = 0; c < cells; ++c) {
        int best = kUnseen;
        for (int h = 0; h < 5; ++h) best = std::min(best, dist[c * 5 + h]);
        if (best != kUnseen) diameter = std::max(diameter, best);
      }
    }
  }
  return diameter;
}

GreedyOutcome greedy_staircase(const GridSet& grid, Cell a, Cell b) {
  require_member(grid, a, "cell a");
  require_member(grid, b, "cell b");
  Cell cur = a;
  std::vector<Point2> points{to_point(a)};
  while (cur != b) {
    const int dx = b.col - cur.col;
    const int dy = b.row - cur.row;
    const int sx = (dx > 0) - (dx < 0);
    const int sy = (dy > 0) - (dy < 0);
    const bool horizontal_first = std::abs(dx) >= std::abs(dy);
    std::optional<Cell> first_block;
    bool advanced = false;
    for (int k = 0; k < 2 && !advanced; ++k) {
      const bool horizontal = (k == 0) == horizontal_first;
      if (horizontal ? sx == 0 : sy == 0) continue;
      const Cell step = horizontal ? Cell{cur.col + sx, cur.row} : Cell{cur.col, cur.row + sy};
      if (!grid.contains(step)) {
        if (!first_block) first_block = step;
        continue;
      }
      // Advance until b's column (row) is reached or the set ends.
      while (horizontal ? cur.col != b.col : cur.row != b.row) {
        const Cell next = horizontal ? Cell{cur.col + sx, cur.row} : Cell{cur.col, cur.row + sy};
        if (!grid.contains(next)) break;
        cur = next;
      }
      points.push_back(to_point(cur));
      advanced = true;
    }
    if (!advanced) return GreedyOutcome{false, OrthoPath::through(points), first_block};
  }
  return GreedyOutcome{true, OrthoPath::through(points), std::nullopt};
}

int bounded_complement_components(const GridSet& grid, int frame_margin) {
  if (frame_margin < 1) throw PreconditionError("frame_margin must be positive");
  const Box2 box{grid.width() + 2 * frame_margin, grid.height() + 2 * frame_margin};
  auto empty = [&](int x, int y) {
    const int gx = x - frame_margin, gy = y - frame_margin;
    return gx < 0 || gy < 0 || gx >= grid.width() || gy >= grid.height() || !grid.test(gx, gy);
  };
  std::vector<char> seen(static_cast<std::size_t>(box.w) * box.h, 0);
  std::vector<std::pair<int, int>> stack;
  auto flood = [&](int x0, int y0) {
    seen[box.index(x0, y0)] = 1;
    stack.push_back({x0, y0});
    bool touches_frame = false;
    while (!stack.empty()) {
      const auto [x, y] = stack.back();
      stack.pop_back();
      if (x == 0 || y == 0 || x == box.w - 1 || y == box.h - 1) touches_frame = true;
      for (Direction d : kDirections) {
        const int nx = x + step_x(d), ny = y + step_y(d);
        if (!box.inside(nx, ny) || seen[box.index(nx, ny)] || !empty(nx, ny)) continue;
        seen[box.index(nx, ny)] = 1;
        stack.push_back({nx, ny});
      }
    }
    return touches_frame;
  };
  int bounded = 0;
  for (int y = 0; y < box.h; ++y) {
    for (int x = 0; x < box.w; ++x) {
      if (seen[box.index(x, y)] || !empty(x, y)) continue;
      if (!flood(x, y)) ++bounded;
    }
  }
  return bounded;
}

GridSet rasterize_convex(const ConvexPolygon& polygon, const Scalar& cell_size) {
  if (cell_size <= 0) throw PreconditionError("cell_size must be positive");
  const Scalar half(1, 2);
  const Box& b = polygon.bounds();
  const long row_lo = ceil_to_long(Scalar(b.ymin / cell_size) - half);
  const long row_hi = floor_to_long(Scalar(b.ymax / cell_size) - half);
  std::vector<Cell> cells;
  for (long j = row_lo; j <= row_hi; ++j) {
    const Scalar y = (Scalar(j) + half) * cell_size;
    const auto chord = polygon.horizontal_chord(y);
    if (!chord) continue;
    const long col_lo = ceil_to_long(Scalar(chord->first / cell_size) - half);
    const long col_hi = floor_to_long(Scalar(chord->second / cell_size) - half);
    for (long i = col_lo; i <= col_hi; ++i) cells.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  if (cells.empty()) throw EmptyRasterization("no cell center lies in the polygon");
  return GridSet::from_cells(cells);
}

GridSet random_grid(std::uint64_t seed, int width, int height, double fill_prob) {
  if (width < 1 || height < 1) throw PreconditionError("random_grid needs positive dimensions");
  if (!(fill_prob > 0.0 && fill_prob < 1.0)) throw PreconditionError("fill_prob must lie in (0, 1)");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(fill_prob);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Cell> cells;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        if (coin(rng)) cells.push_back({x, y});
      }
    }
    if (!cells.empty()) return GridSet::from_cells(cells);
  }
  throw std::runtime_error("random_grid: no nonempty draw after 1000 attempts");
}

GridSet random_staircase_grid(std::uint64_t seed, int width, int height) {
  if (width < 1 || height < 1) throw PreconditionError("random_staircase_grid needs positive dimensions");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::bernoulli_distribution flip(0.25);
  for (int attempt = 0; attempt < 100; ++attempt) {
    int l = uniform(0, width - 1);
    int r = uniform(l, width - 1);
    bool left_falling = true;   // left ends move left, then right
    bool right_rising = true;   // right ends move right, then left
    std::vector<Cell> cells;
    for (int y = 0; y < height; ++y) {
      for (int x = l; x <= r; ++x) cells.push_back({x, y});
      if (left_falling && flip(rng)) left_falling = false;
      if (right_rising && flip(rng)) right_rising = false;
      const int nl = left_falling ? uniform(0, l) : uniform(l, r);
      const int nr = right_rising ? uniform(r, width - 1) : uniform(std::max(l, nl), r);
      l = nl;
      r = nr;
    }
    GridSet g = GridSet::from_cells(cells);
    if (is_staircase_connected(g)) return g;
  }
  throw std::runtime_error("random_staircase_grid: generator failed verification 100 times");
}

GridSet largest_component(const GridSet& grid) {
  std::vector<int> label;
  const int n = label_components(grid, label);
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (int l : label) {
    if (l >= 0) ++size[static_cast<std::size_t>(l)];
  }
  const int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<Cell> cells;
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (label[static_cast<std::size_t>(y) * grid.width() + x] == best) {
        cells.push_back({grid.origin().col + x, grid.origin().row + y});
      }
    }
  }
  return GridSet::from_cells(cells);
}

}  // namespace staircase
