#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staircase/convex_polygon.hpp"
#include "staircase/ortho_path.hpp"

namespace staircase {

// A unit cell of the integer grid, in absolute coordinates. Rows grow
// upward (the +y direction).
struct Cell {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline Point2 to_point(Cell c) { return {Scalar(c.col), Scalar(c.row)}; }

// Finite nonempty set of closed unit cells. The stored bounding box is
// always tight. Storage is one bit row per grid row.
class GridSet {
 public:
  // Throws PreconditionError if `cells` is empty.
  static GridSet from_cells(std::span<const Cell> cells);

  // `rows` lists the grid top row first; '#' marks a cell, '.' an empty
  // slot. `origin` is the absolute (col, row) of the lower-left slot.
  // Rejects ragged, empty, or non-tight input so that to_rows()
  // reproduces the text exactly.
  static GridSet from_rows(const std::vector<std::string>& rows, Cell origin);

  Cell origin() const { return origin_; }
  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t cell_count() const { return count_; }

  bool contains(Cell c) const {
    const int x = c.col - origin_.col;
    const int y = c.row - origin_.row;
    return x >= 0 && y >= 0 && x < width_ && y < height_ && test(x, y);
  }

  // Row-major, bottom row first, increasing column.
  std::vector<Cell> cells() const;
  std::vector<std::string> to_rows() const;

  friend bool operator==(const GridSet& a, const GridSet& b) {
    return a.origin_ == b.origin_ && a.width_ == b.width_ && a.height_ == b.height_ && a.bits_ == b.bits_;
  }

  // Local (origin-relative) access for algorithms that work on the box.
  bool test(int x, int y) const {
    return (bits_[static_cast<std::size_t>(y) * words_ + (x >> 6)] >> (x & 63)) & 1U;
  }

 private:
  GridSet(Cell origin, int width, int height);
  void set(int x, int y) {
    bits_[static_cast<std::size_t>(y) * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
  }

  Cell origin_;
  int width_ = 0;
  int height_ = 0;
  std::size_t words_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// All set cells form a single 4-connected component.
bool is_orthogonally_connected(const GridSet& grid);

// Every row and every column meets the set in one contiguous run.
bool is_orthogonally_convex(const GridSet& grid);

// Orthogonally connected and orthogonally convex.
bool is_staircase_connected(const GridSet& grid);

// Oracle: a 4-path from a to b that only steps in the componentwise
// direction from a toward b. Throws PreconditionError for cells outside.
bool monotone_path_exists(const GridSet& grid, Cell a, Cell b);

// Oracle: monotone_path_exists for every ordered pair of cells, computed
// with one quadrant sweep per source.
bool all_pairs_monotone_connected(const GridSet& grid);

// Length of the maximal horizontal / vertical run through c.
int hw(const GridSet& grid, Cell c);
int vw(const GridSet& grid, Cell c);

struct LinkDistance {
  int links = 0;
  OrthoPath witness;  // vertices are cell coordinates
};

// Minimum number of links of a 4-path of cells from a to b. nullopt when
// b is unreachable. The witness is lexicographically least by
// (links, cells visited, step directions in E < N < W < S order).
std::optional<LinkDistance> s_distance(const GridSet& grid, Cell a, Cell b);

// Maximum s_distance over all pairs. Throws PreconditionError when the grid
// is not orthogonally connected.
int s_diameter(const GridSet& grid);

struct GreedyOutcome {
  bool success = false;
  OrthoPath path;                 // the staircase built so far
  std::optional<Cell> blocked_at; // on failure: the first missing cell
};

// Builds a staircase from a toward b by advancing as far as possible along
// one axis, then the other. The axis with the larger remaining
// displacement goes first; ties go horizontal.
GreedyOutcome greedy_staircase(const GridSet& grid, Cell a, Cell b);

// Number of 4-connected components of empty cells inside the bounding box
// grown by `frame_margin` that do not touch the grown frame.
int bounded_complement_components(const GridSet& grid, int frame_margin = 1);

class EmptyRasterization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cell (i, j) spans [i*s, (i+1)*s] x [j*s, (j+1)*s] and is included iff its
// center lies in the closed polygon. Throws EmptyRasterization when no
// center is covered.
GridSet rasterize_convex(const ConvexPolygon& polygon, const Scalar& cell_size);

// Each cell of a w x h box is set with probability fill_prob. Retries on an
// empty draw.
GridSet random_grid(std::uint64_t seed, int width, int height, double fill_prob);

// Stacked row intervals whose left ends fall then rise and whose right ends
// rise then fall, with consecutive rows overlapping. Post-verified.
GridSet random_staircase_grid(std::uint64_t seed, int width, int height);

// The 4-connected component containing the most cells (ties: the one with
// the lowest first cell).
GridSet largest_component(const GridSet& grid);

}  // namespace staircase
