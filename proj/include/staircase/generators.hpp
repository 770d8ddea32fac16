#pragma once

#include <cstdint>
#include <random>

#include "staircase/convex_polygon.hpp"
#include "staircase/grid.hpp"
#include "staircase/rect_complex.hpp"
#include "staircase/routing.hpp"

namespace staircase {

using Rng = std::mt19937_64;

// Independent stream for case `index` of a run seeded with `seed`.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

// Uniform multiple of 1/denominator in [lo, hi].
Scalar random_rational(Rng& rng, long lo, long hi, long denominator);

// Hull of up to `max_vertices` points on a randomly stretched ellipse,
// snapped to quarters in [-100, 100].
ConvexPolygon random_convex_polygon(Rng& rng, int max_vertices = 12);

// Integer vertices in [lo, hi]^2.
ConvexPolygon random_lattice_polygon(Rng& rng, long lo, long hi);

// Rejection sampled from near-circular polygons.
ConvexPolygon random_obtuse_polygon(Rng& rng);

// A point not in int P: usually off P, sometimes on an edge or a vertex.
Point2 random_exterior_point(Rng& rng, const ConvexPolygon& polygon);

// Up to `max_rects` rectangles with integer corners in [0, 6], each one
// touching an earlier one. Includes zero-width corridors and corner
// contacts.
RectComplex random_connected_complex(Rng& rng, int max_rects = 8);

// Adjacent columns with overlapping y-ranges: connected, vertically
// convex, no degenerate rectangle.
RectComplex random_column_complex(Rng& rng);

struct CarveCase {
  GridSet region;
  ConvexPolygon polygon;
  Scalar cell_size;
};

// A 16 x 16 block with bites taken from its outer ring of width 3 and a
// small convex polygon placed in the untouched core.
CarveCase random_carve_case(Rng& rng);

struct MultiRouteCase {
  RoutingScene scene;
  Point2 p;
  Point2 q;
  Scalar cell_size;
};

// Up to five disjoint convex obstacles, a window with the required margin,
// two free endpoints, and a spacing of 1/24 to 1/32 of the window width.
MultiRouteCase random_multi_route_case(Rng& rng);

}  // namespace staircase
