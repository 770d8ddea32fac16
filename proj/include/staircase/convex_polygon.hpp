#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "staircase/geometry.hpp"

namespace staircase {

// Which part of a polygon a query may touch: its open interior only, or the
// closed region including the boundary.
enum class Region { Interior, Closed };

// Strictly convex polygon with counter-clockwise vertices. The constructor
// rejects anything else (fewer than three vertices, repeated vertices,
// collinear or reflex turns, clockwise order).
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point2> ccw_vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const Point2& next(std::size_t i) const { return vertex(i + 1); }
  const Point2& prev(std::size_t i) const { return vertex(i + vertices_.size() - 1); }

  const Box& bounds() const { return bounds_; }

  bool contains(const Point2& p, Region region) const;
  std::optional<std::size_t> vertex_index(const Point2& p) const;
  bool on_boundary(const Point2& p) const;

  // Closed x-range of the polygon on the horizontal line at height y.
  std::optional<std::pair<Scalar, Scalar>> horizontal_chord(const Scalar& y) const;
  // Closed y-range of the polygon on the vertical line at abscissa x.
  std::optional<std::pair<Scalar, Scalar>> vertical_chord(const Scalar& x) const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Point2> vertices_;
  Box bounds_;
};

// True iff the closed segment ab meets int P (Region::Interior) or P
// (Region::Closed). A degenerate segment a == b is a point query.
bool segment_hits_convex(const Point2& a, const Point2& b, const ConvexPolygon& polygon,
                         Region region);

// Closed axis-parallel ray from origin in direction d.
bool ray_hits_convex(const Point2& origin, Direction d, const ConvexPolygon& polygon,
                     Region region);

// Closed intersection test for two convex polygons.
bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b);

}  // namespace staircase
