#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staircase/convex_polygon.hpp"
#include "staircase/ortho_path.hpp"

namespace staircase {

enum class AlphaClass { Acute, Right, ObtuseAngle, Flat };

std::string_view to_string(AlphaClass c);

// Cone at a boundary point, spanned counter-clockwise from `first` to
// `second`. Always closed for polygons.
struct TangentCone {
  Point2 apex;
  Vec2 first;
  Vec2 second;
  bool closed = true;
};

// Throws PreconditionError if x is not on the boundary.
TangentCone tangent_cone(const ConvexPolygon& polygon, const Point2& x);
AlphaClass alpha_class(const ConvexPolygon& polygon, const Point2& x);

bool is_obtuse_body(const ConvexPolygon& polygon);

// Axis directions inside the closed tangent cone at vertex v, in E, N, W,
// S order. Throws PreconditionError if v is not a vertex.
std::vector<Direction> cone_contains_axis_dir(const ConvexPolygon& polygon, const Point2& v);

struct ConvexCertificate {
  bool staircase_connected = false;
  std::optional<Point2> violating_vertex;
};

ConvexCertificate is_staircase_connected_convex(const ConvexPolygon& polygon);

std::vector<Point2> non_obtuse_vertices(const ConvexPolygon& polygon);

// p -> (a x + b y + tx, c x + d y + ty).
struct AffineMap {
  Scalar a = 1, b = 0, c = 0, d = 1, tx = 0, ty = 0;

  static AffineMap identity() { return {}; }
  Point2 apply(const Point2& p) const { return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty}; }
  ConvexPolygon apply(const ConvexPolygon& polygon) const;
  // Positive multiple of a rotation: orthogonal columns of equal length
  // and positive determinant.
  bool is_similarity() const;
  Scalar scale_squared() const { return a * a + c * c; }
  bool is_identity() const { return *this == AffineMap{}; }

  friend bool operator==(const AffineMap& l, const AffineMap& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d && l.tx == r.tx && l.ty == r.ty;
  }
};

struct Rotation {
  ConvexPolygon polygon;
  AffineMap map;
};

// Identity when the polygon is obtuse or already certified; otherwise
// makes the chord between two non-obtuse vertices (or an edge at the only
// one) horizontal, using a rotation scaled to keep coordinates rational.
Rotation rotate_to_staircase(const ConvexPolygon& polygon);

// Monotone chain hull with collinear points dropped. Throws
// PreconditionError when the points span no area.
ConvexPolygon convex_hull(std::vector<Point2> points);
ConvexPolygon hull_of_union(std::span<const ConvexPolygon> polygons);

// Hull of obtuse polygons is obtuse and certified. Throws
// PreconditionError for an empty list or a non-obtuse input.
bool check_hull_obtuse(std::span<const ConvexPolygon> polygons);

struct UnionConnectivity {
  bool coarse_connected = false;
  bool fine_connected = false;
  Scalar coarse_cell;
  Scalar fine_cell;

  bool connected() const { return coarse_connected && fine_connected; }
};

// Rasterizes the union at cell_size and cell_size / 2 and checks
// 4-connectivity at both. Throws PreconditionError for non-obtuse input or
// a disconnected union, EmptyRasterization when no cell is covered.
UnionConnectivity union_orthogonal_connectivity_check(std::span<const ConvexPolygon> polygons,
                                                      const Scalar& cell_size);

enum class ExtremeReason { Hw0, Vw0, Both };

std::string_view to_string(ExtremeReason r);

struct ExtremePoint {
  Point2 point;
  ExtremeReason reason;
};

// Unique top/bottom vertices (hw0) and unique left/right vertices (vw0),
// in vertex order.
std::vector<ExtremePoint> s_extreme_points(const ConvexPolygon& polygon);

// Length of the horizontal / vertical chord through a point of P.
Scalar horizontal_chord_length(const ConvexPolygon& polygon, const Point2& p);
Scalar vertical_chord_length(const ConvexPolygon& polygon, const Point2& p);

// Two-link staircase b -> e -> c through vertex e, where b and c are the far
// ends of the horizontal and vertical chords. nullopt when either chord is
// a single point.
std::optional<OrthoPath> staircase_through_vertex(const ConvexPolygon& polygon, const Point2& e);

}  // namespace staircase
