#pragma once

#include <vector>

#include "staircase/geometry.hpp"

namespace staircase {

// Polyline whose edges are axis-parallel. Stored in normal form: no
// zero-length edges and no two consecutive edges running the same way
// (those are merged), so link_count() is the number of maximal segments.
class OrthoPath {
 public:
  // Normalizes `points`. Throws PreconditionError if empty or if two
  // consecutive points differ in both coordinates.
  static OrthoPath through(const std::vector<Point2>& points);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const Point2& front() const { return vertices_.front(); }
  const Point2& back() const { return vertices_.back(); }
  int link_count() const { return static_cast<int>(vertices_.size()) - 1; }

  Direction edge_direction(std::size_t i) const;

  // All horizontal edges point the same way and all vertical edges point
  // the same way.
  bool is_staircase() const;

  friend bool operator==(const OrthoPath& a, const OrthoPath& b) { return a.vertices_ == b.vertices_; }

 private:
  explicit OrthoPath(std::vector<Point2> v) : vertices_(std::move(v)) {}
  std::vector<Point2> vertices_;
};

}  // namespace staircase
