#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "staircase/convex_polygon.hpp"
#include "staircase/grid.hpp"
#include "staircase/ortho_path.hpp"
#include "staircase/rect_complex.hpp"

namespace staircase {

using Json = nlohmann::ordered_json;

struct SceneQuery {
  Point2 p;
  Point2 q;
};

struct SceneSpec {
  Box window;
  std::vector<ConvexPolygon> obstacles;
  std::vector<SceneQuery> queries;
  std::optional<Scalar> cell_size;
};

bool operator==(const SceneSpec& a, const SceneSpec& b);

// Named inputs, one map per kind. Numbers are rationals written as
// strings ("1/3", "-0.25") or JSON integers.
//
//   { "grids":     { name: { "origin": [col, row], "rows": ["#.", "##"] } },
//     "polygons":  { name: [[x, y], ...] },
//     "complexes": { name: [[xmin, ymin, xmax, ymax], ...] },
//     "scenes":    { name: { "window": [xmin, ymin, xmax, ymax],
//                            "obstacles": [[[x, y], ...], ...],
//                            "queries": [[[px, py], [qx, qy]], ...],
//                            "cell_size": s } } }
//
// Unknown keys, duplicate keys and malformed values raise ParseError.
struct SceneFile {
  std::map<std::string, GridSet> grids;
  std::map<std::string, ConvexPolygon> polygons;
  std::map<std::string, RectComplex> complexes;
  std::map<std::string, SceneSpec> scenes;

  static SceneFile parse(const std::string& text);
  static SceneFile load(const std::string& path);

  Json to_json() const;
  std::string dump() const { return to_json().dump(2) + "\n"; }

  friend bool operator==(const SceneFile&, const SceneFile&) = default;
};

Json scalar_json(const Scalar& s);
Json point_json(const Point2& p);
Json points_json(const std::vector<Point2>& points);
Json path_json(const OrthoPath& path);
Json grid_json(const GridSet& grid);
Json polygon_json(const ConvexPolygon& polygon);
Json complex_json(const RectComplex& complex);
Json scene_json(const SceneSpec& scene);

}  // namespace staircase
