#include "staircase/geometry.hpp"

#include <string>

namespace staircase {

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << format_scalar(p.x) << ", " << format_scalar(p.y) << ')';
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::East: return "E";
    case Direction::North: return "N";
    case Direction::West: return "W";
    case Direction::South: return "S";
  }
  return "?";
}

std::string_view to_string(Axis a) { return a == Axis::Horizontal ? "horizontal" : "vertical"; }

Direction parse_direction(std::string_view text) {
  for (Direction d : kDirections) {
    if (to_string(d) == text) return d;
  }
  throw ParseError("unknown direction '" + std::string(text) + "'");
}

int orient(const Point2& p, const Point2& q, const Point2& r) {
  return sign_of(cross(q - p, r - p));
}

int dot_sign(const Vec2& u, const Vec2& v) {
  if (sgn(u.x) == 0 && sgn(u.y) == 0) throw PreconditionError("dot_sign: zero vector u");
  if (sgn(v.x) == 0 && sgn(v.y) == 0) throw PreconditionError("dot_sign: zero vector v");
  return sign_of(dot(u, v));
}

}  // namespace staircase
