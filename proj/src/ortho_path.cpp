#include "staircase/ortho_path.hpp"

#include <optional>

namespace staircase {

namespace {

Direction direction_between(const Point2& a, const Point2& b) {
  if (a.y == b.y) return a.x < b.x ? Direction::East : Direction::West;
  return a.y < b.y ? Direction::North : Direction::South;
}

}  // namespace

OrthoPath OrthoPath::through(const std::vector<Point2>& points) {
  if (points.empty()) throw PreconditionError("orthogonal path needs at least one vertex");
  std::vector<Point2> out;
  out.reserve(points.size());
  for (const Point2& p : points) {
    if (!out.empty() && out.back() == p) continue;
    if (!out.empty() && out.back().x != p.x && out.back().y != p.y) {
      throw PreconditionError("orthogonal path edge is not axis-parallel");
    }
    if (out.size() >= 2 &&
        direction_between(out[out.size() - 2], out.back()) == direction_between(out.back(), p)) {
      out.back() = p;
      continue;
    }
    out.push_back(p);
  }
  return OrthoPath(std::move(out));
}

Direction OrthoPath::edge_direction(std::size_t i) const {
  return direction_between(vertices_[i], vertices_[i + 1]);
}

bool OrthoPath::is_staircase() const {
  std::optional<Direction> horizontal;
  std::optional<Direction> vertical;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const Direction d = edge_direction(i);
    auto& seen = axis_of(d) == Axis::Horizontal ? horizontal : vertical;
    if (seen && *seen != d) return false;
    seen = d;
  }
  return true;
}

}  // namespace staircase
