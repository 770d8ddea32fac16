#pragma once

#include <array>
#include <compare>
#include <ostream>
#include <string_view>

#include "staircase/rational.hpp"

namespace staircase {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A point of the plane. Also used for displacement vectors.
struct Point2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  // Lexicographic (x, then y).
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

using Vec2 = Point2;

inline Point2 operator+(const Point2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline Scalar cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Scalar dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

std::ostream& operator<<(std::ostream& os, const Point2& p);

enum class Axis { Horizontal, Vertical };

// Order matters: E < N < W < S is the witness tie-break order.
enum class Direction { East = 0, North = 1, West = 2, South = 3 };

inline constexpr std::array<Direction, 4> kDirections = {Direction::East, Direction::North,
                                                         Direction::West, Direction::South};

constexpr Axis axis_of(Direction d) {
  return (d == Direction::East || d == Direction::West) ? Axis::Horizontal : Axis::Vertical;
}
constexpr int step_x(Direction d) { return d == Direction::East ? 1 : d == Direction::West ? -1 : 0; }
constexpr int step_y(Direction d) { return d == Direction::North ? 1 : d == Direction::South ? -1 : 0; }
constexpr Direction opposite(Direction d) { return static_cast<Direction>((static_cast<int>(d) + 2) % 4); }

inline Vec2 unit_vector(Direction d) { return {Scalar(step_x(d)), Scalar(step_y(d))}; }

std::string_view to_string(Direction d);
std::string_view to_string(Axis a);
Direction parse_direction(std::string_view text);

// Sign of (q - p) x (r - p): +1 for a counter-clockwise turn.
int orient(const Point2& p, const Point2& q, const Point2& r);

// Sign of u . v. Both vectors must be nonzero.
int dot_sign(const Vec2& u, const Vec2& v);

// Closed axis-aligned box.
struct Box {
  Scalar xmin, ymin, xmax, ymax;

  bool contains(const Point2& p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
  }
  friend bool operator==(const Box& a, const Box& b) {
    return a.xmin == b.xmin && a.ymin == b.ymin && a.xmax == b.xmax && a.ymax == b.ymax;
  }
};

}  // namespace staircase
