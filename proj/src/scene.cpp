#include "staircase/scene.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace staircase {

bool operator==(const SceneSpec& a, const SceneSpec& b) {
  if (!(a.window == b.window) || a.obstacles != b.obstacles || a.cell_size != b.cell_size) return false;
  if (a.queries.size() != b.queries.size()) return false;
  for (std::size_t i = 0; i < a.queries.size(); ++i) {
    if (!(a.queries[i].p == b.queries[i].p) || !(a.queries[i].q == b.queries[i].q)) return false;
  }
  return true;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

Scalar read_scalar(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.dump());
  fail(where, "expected a rational string or an integer");
}

const Json& require_array(const Json& j, const std::string& where, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) fail(where, "expected an array");
  if (size && j.size() != *size) fail(where, "expected " + std::to_string(*size) + " entries");
  return j;
}

void require_keys(const Json& j, const std::string& where, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) fail(where, "unknown key '" + key + "'");
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) fail(where, "missing key '" + key + "'");
  }
}

Point2 read_point(const Json& j, const std::string& where) {
  require_array(j, where, 2);
  return {read_scalar(j[0], where + "[0]"), read_scalar(j[1], where + "[1]")};
}

ConvexPolygon read_polygon(const Json& j, const std::string& where) {
  require_array(j, where);
  std::vector<Point2> vertices;
  for (std::size_t i = 0; i < j.size(); ++i) vertices.push_back(read_point(j[i], where + "[" + std::to_string(i) + "]"));
  try {
    return ConvexPolygon(std::move(vertices));
  } catch (const PreconditionError& e) {
    fail(where, e.what());
  }
}

Box read_box(const Json& j, const std::string& where) {
  require_array(j, where, 4);
  Box b{read_scalar(j[0], where), read_scalar(j[1], where), read_scalar(j[2], where), read_scalar(j[3], where)};
  if (b.xmin > b.xmax || b.ymin > b.ymax) fail(where, "reversed bounds");
  return b;
}

GridSet read_grid(const Json& j, const std::string& where) {
  require_keys(j, where, {"origin", "rows"}, {"rows"});
  Cell origin{0, 0};
  if (j.contains("origin")) {
    const Json& o = require_array(j["origin"], where + ".origin", 2);
    if (!o[0].is_number_integer() || !o[1].is_number_integer()) fail(where + ".origin", "expected integers");
    origin = {o[0].get<int>(), o[1].get<int>()};
  }
  std::vector<std::string> rows;
  for (const Json& r : require_array(j["rows"], where + ".rows")) {
    if (!r.is_string()) fail(where + ".rows", "expected strings");
    rows.push_back(r.get<std::string>());
  }
  try {
    return GridSet::from_rows(rows, origin);
  } catch (const PreconditionError& e) {
    fail(where, e.what());
  }
}

RectComplex read_complex(const Json& j, const std::string& where) {
  std::vector<Rect> rects;
  for (std::size_t i = 0; i < require_array(j, where).size(); ++i) {
    const Box b = read_box(j[i], where + "[" + std::to_string(i) + "]");
    rects.push_back({b.xmin, b.ymin, b.xmax, b.ymax});
  }
  try {
    return RectComplex(std::move(rects));
  } catch (const PreconditionError& e) {
    fail(where, e.what());
  }
}

SceneSpec read_scene(const Json& j, const std::string& where) {
  require_keys(j, where, {"window", "obstacles", "queries", "cell_size"}, {"window"});
  SceneSpec s{read_box(j["window"], where + ".window"), {}, {}, std::nullopt};
  if (j.contains("obstacles")) {
    const Json& obs = require_array(j["obstacles"], where + ".obstacles");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      s.obstacles.push_back(read_polygon(obs[i], where + ".obstacles[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("queries")) {
    const Json& qs = require_array(j["queries"], where + ".queries");
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::string at = where + ".queries[" + std::to_string(i) + "]";
      require_array(qs[i], at, 2);
      s.queries.push_back({read_point(qs[i][0], at), read_point(qs[i][1], at)});
    }
  }
  if (j.contains("cell_size")) {
    s.cell_size = read_scalar(j["cell_size"], where + ".cell_size");
    if (*s.cell_size <= 0) fail(where + ".cell_size", "must be positive");
  }
  return s;
}

template <typename T, typename Reader>
void read_section(const Json& root, const char* key, std::map<std::string, T>& out, Reader reader) {
  if (!root.contains(key)) return;
  const Json& section = root[key];
  if (!section.is_object()) fail(key, "expected an object of named entries");
  for (const auto& [name, value] : section.items()) {
    out.emplace(name, reader(value, std::string(key) + "." + name));
  }
}

}  // namespace

SceneFile SceneFile::parse(const std::string& text) {
  // One key set per open object, to reject duplicate names.
  std::vector<std::set<std::string>> open;
  const Json::parser_callback_t guard = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        open.emplace_back();
        break;
      case Json::parse_event_t::object_end:
        open.pop_back();
        break;
      case Json::parse_event_t::key: {
        const std::string key = parsed.get<std::string>();
        if (!open.back().insert(key).second) throw ParseError("duplicate key '" + key + "'");
        break;
      }
      default:
        break;
    }
    return true;
  };
  Json root;
  try {
    root = Json::parse(text, guard);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(root, "scene file", {"grids", "polygons", "complexes", "scenes"}, {});
  SceneFile out;
  read_section(root, "grids", out.grids, read_grid);
  read_section(root, "polygons", out.polygons, read_polygon);
  read_section(root, "complexes", out.complexes, read_complex);
  read_section(root, "scenes", out.scenes, read_scene);
  return out;
}

SceneFile SceneFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scene file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

Json scalar_json(const Scalar& s) { return format_scalar(s); }

Json point_json(const Point2& p) { return Json::array({scalar_json(p.x), scalar_json(p.y)}); }

Json points_json(const std::vector<Point2>& points) {
  Json out = Json::array();
  for (const Point2& p : points) out.push_back(point_json(p));
  return out;
}

Json path_json(const OrthoPath& path) { return points_json(path.vertices()); }

Json grid_json(const GridSet& grid) {
  return Json{{"origin", Json::array({grid.origin().col, grid.origin().row})}, {"rows", grid.to_rows()}};
}

Json polygon_json(const ConvexPolygon& polygon) { return points_json(polygon.vertices()); }

Json complex_json(const RectComplex& complex) {
  Json out = Json::array();
  for (const Rect& r : complex.rects()) {
    out.push_back(Json::array({scalar_json(r.xmin), scalar_json(r.ymin), scalar_json(r.xmax), scalar_json(r.ymax)}));
  }
  return out;
}

Json scene_json(const SceneSpec& scene) {
  const Box& w = scene.window;
  Json out{{"window", Json::array({scalar_json(w.xmin), scalar_json(w.ymin), scalar_json(w.xmax), scalar_json(w.ymax)})}};
  Json obstacles = Json::array();
  for (const ConvexPolygon& p : scene.obstacles) obstacles.push_back(polygon_json(p));
  out["obstacles"] = obstacles;
  Json queries = Json::array();
  for (const SceneQuery& q : scene.queries) queries.push_back(Json::array({point_json(q.p), point_json(q.q)}));
  out["queries"] = queries;
  if (scene.cell_size) out["cell_size"] = scalar_json(*scene.cell_size);
  return out;
}

Json SceneFile::to_json() const {
  Json out = Json::object();
  auto section = [&](const char* key, const auto& entries, auto writer) {
    if (entries.empty()) return;
    Json s = Json::object();
    for (const auto& [name, value] : entries) s[name] = writer(value);
    out[key] = s;
  };
  section("grids", grids, grid_json);
  section("polygons", polygons, polygon_json);
  section("complexes", complexes, complex_json);
  section("scenes", scenes, scene_json);
  return out;
}

}  // namespace staircase
