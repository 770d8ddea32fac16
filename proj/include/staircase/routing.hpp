#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staircase/convex_polygon.hpp"
#include "staircase/grid.hpp"
#include "staircase/ortho_path.hpp"

namespace staircase {

// Pairwise disjoint convex obstacles inside a window whose margin around
// the obstacles is at least the largest obstacle diameter.
class RoutingScene {
 public:
  // Throws PreconditionError when obstacles meet or the margin is short.
  RoutingScene(Box window, std::vector<ConvexPolygon> obstacles);

  const Box& window() const { return window_; }
  const std::vector<ConvexPolygon>& obstacles() const { return obstacles_; }

 private:
  Box window_;
  std::vector<ConvexPolygon> obstacles_;
};

enum class RouteCase { Direct, LCorner, SharedDirection, Corner, GridSearch };

std::string_view to_string(RouteCase c);

struct RouteResult {
  OrthoPath path;
  int links = 0;
  bool verified = false;
  RouteCase case_tag = RouteCase::Direct;
};

// Axis directions whose closed ray from p misses int P. Throws
// PreconditionError if p is in int P.
std::vector<Direction> escape_dirs(const Point2& p, const ConvexPolygon& polygon);

// At most four links around one bounded obstacle. Candidates are tried in
// order (direct, L-corner, shared escape direction, corner) and the first
// one that verifies is returned. Throws PreconditionError if p or q is in
// int P or p == q; throws std::logic_error if nothing verifies.
RouteResult route_around_convex(const Point2& p, const Point2& q, const ConvexPolygon& polygon);

// Every edge misses every obstacle interior.
bool path_avoids(const OrthoPath& path, const std::vector<ConvexPolygon>& obstacles);

// path_avoids plus every vertex inside the closed window.
bool verify_path(const OrthoPath& path, const RoutingScene& scene);

struct RefinementStep {
  Scalar cell_size;
  bool found = false;
};

struct MultiRoute {
  std::optional<RouteResult> route;
  std::vector<RefinementStep> trace;

  bool exhausted() const { return !route; }
};

inline constexpr int kMaxHalvings = 4;

// Fewest-link search on the lattice of lines spaced cell_size across the
// window (plus the window sides and the lines through p and q). Lattice
// nodes and segments touching an obstacle interior are removed. The grid
// witness is lifted to exact coordinates and verified; on failure the
// spacing is halved, up to kMaxHalvings times. Throws PreconditionError if
// p or q is outside the window or inside an obstacle.
MultiRoute route_multi(const RoutingScene& scene, const Point2& p, const Point2& q, const Scalar& cell_size);

// Removes the rasterization of K from C and tests 4-connectivity. Requires
// C connected and every rasterized cell of K to have its 8 neighbours in C;
// throws PreconditionError otherwise. An empty rasterization leaves C as is.
bool carve_check(const GridSet& region, const ConvexPolygon& polygon, const Scalar& cell_size);

}  // namespace staircase
