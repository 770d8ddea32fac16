#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "staircase/convex_analysis.hpp"
#include "staircase/grid.hpp"
#include "staircase/rect_complex.hpp"
#include "staircase/routing.hpp"
#include "staircase/scene.hpp"
#include "staircase/suites.hpp"
#include "staircase/svg.hpp"

using namespace staircase;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Raised for anything that maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string input;
  std::uint64_t seed = 0;
  std::string svg_dir;
  std::string json_path;
};

struct Outcome {
  Json report;
  int exit_code = kExitPass;
};

enum class Kind { Grid, Polygon, Complex, Scene };

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Grid: return "grid";
    case Kind::Polygon: return "polygon";
    case Kind::Complex: return "complex";
    case Kind::Scene: return "scene";
  }
  return "?";
}

class Workbench {
 public:
  explicit Workbench(Globals g) : globals_(std::move(g)) {}

  const SceneFile& file() {
    if (!file_) {
      if (globals_.input.empty()) throw UsageError("--input is required for this command");
      file_ = SceneFile::load(globals_.input);
    }
    return *file_;
  }

  // Finds `name` in the sections allowed by `wanted`; a hit in another
  // section is reported as a kind mismatch.
  Kind resolve(const std::string& name, std::initializer_list<Kind> wanted, std::optional<Kind> forced = {}) {
    const SceneFile& f = file();
    std::vector<Kind> found;
    if (f.grids.count(name)) found.push_back(Kind::Grid);
    if (f.polygons.count(name)) found.push_back(Kind::Polygon);
    if (f.complexes.count(name)) found.push_back(Kind::Complex);
    if (f.scenes.count(name)) found.push_back(Kind::Scene);
    if (found.empty()) throw UsageError("no target named '" + name + "' in " + globals_.input);
    std::string expected;
    for (Kind w : wanted) {
      if (!expected.empty()) expected += " or ";
      expected += kind_name(w);
    }
    for (Kind k : found) {
      if (forced && k != *forced) continue;
      if (std::find(wanted.begin(), wanted.end(), k) != wanted.end()) return k;
    }
    throw UsageError("target '" + name + "' is a " + kind_name(found.front()) + ", expected a " + expected);
  }

  void svg(const std::string& stem, const SvgCanvas& canvas, Json& report) {
    if (globals_.svg_dir.empty()) return;
    std::filesystem::create_directories(globals_.svg_dir);
    const std::string path = (std::filesystem::path(globals_.svg_dir) / (stem + ".svg")).string();
    canvas.save(path);
    report["svg"] = path;
  }

  const Globals& globals() const { return globals_; }

 private:
  Globals globals_;
  std::optional<SceneFile> file_;
};

Cell parse_cell(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("cell '" + text + "' must be COL,ROW");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const int col = std::stoi(a, &used_a);
    const int row = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {col, row};
  } catch (const std::logic_error&) {
    throw UsageError("cell '" + text + "' must be COL,ROW");
  }
}

Json cell_json(Cell c) { return Json::array({c.col, c.row}); }

Outcome verdict(Json report, bool pass) {
  report["verdict"] = pass ? "pass" : "fail";
  return {std::move(report), pass ? kExitPass : kExitFail};
}

// ---- check ----

struct CheckArgs {
  std::string target;
  std::string analysis = "staircase";
  std::string kind;
  bool waive_normality = false;
};

std::optional<std::pair<Cell, Cell>> non_monotone_pair(const GridSet& g) {
  const std::vector<Cell> cells = g.cells();
  for (const Cell& a : cells) {
    for (const Cell& b : cells) {
      if (!monotone_path_exists(g, a, b)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

// Two cells on one row or column with a gap between them.
std::optional<std::pair<Cell, Cell>> convexity_gap(const GridSet& g) {
  const Cell o = g.origin();
  for (int y = 0; y < g.height(); ++y) {
    int last = -1;
    for (int x = 0; x < g.width(); ++x) {
      if (!g.test(x, y)) continue;
      if (last >= 0 && x > last + 1) return std::pair{Cell{o.col + last, o.row + y}, Cell{o.col + x, o.row + y}};
      last = x;
    }
  }
  for (int x = 0; x < g.width(); ++x) {
    int last = -1;
    for (int y = 0; y < g.height(); ++y) {
      if (!g.test(x, y)) continue;
      if (last >= 0 && y > last + 1) return std::pair{Cell{o.col + x, o.row + last}, Cell{o.col + x, o.row + y}};
      last = y;
    }
  }
  return std::nullopt;
}

Outcome check_grid(Workbench& wb, const CheckArgs& args, Json report) {
  const GridSet& g = wb.file().grids.at(args.target);
  report["cells"] = g.cell_count();
  if (args.analysis == "staircase") {
    const bool ok = is_staircase_connected(g);
    if (ok) {
      report["certificate"] = Json{{"s_diameter", s_diameter(g)}};
    } else if (const auto pair = non_monotone_pair(g)) {
      report["certificate"] = Json{{"no_staircase_between", Json::array({cell_json(pair->first), cell_json(pair->second)})}};
    }
    wb.svg("check-" + args.target, draw_grid(g), report);
    return verdict(report, ok);
  }
  if (args.analysis == "orthogonal-convexity") {
    const auto gap = convexity_gap(g);
    if (gap) report["certificate"] = Json{{"gap_between", Json::array({cell_json(gap->first), cell_json(gap->second)})}};
    wb.svg("check-" + args.target, draw_grid(g), report);
    return verdict(report, !gap);
  }
  if (args.analysis == "orthogonal-connectivity") {
    const bool ok = is_orthogonally_connected(g);
    if (!ok) {
      const GridSet big = largest_component(g);
      for (const Cell& c : g.cells()) {
        if (!big.contains(c)) {
          report["certificate"] = Json{{"outside_largest_component", cell_json(c)}};
          break;
        }
      }
    }
    return verdict(report, ok);
  }
  if (args.analysis == "holes") {
    const int holes = bounded_complement_components(g);
    report["certificate"] = Json{{"bounded_complement_components", holes}};
    return verdict(report, holes == 0);
  }
  throw UsageError("analysis '" + args.analysis +
                   "' does not apply to a grid (use staircase, orthogonal-convexity, orthogonal-connectivity, holes)");
}

Outcome check_polygon(Workbench& wb, const CheckArgs& args, Json report) {
  const ConvexPolygon& p = wb.file().polygons.at(args.target);
  if (args.analysis == "staircase") {
    const ConvexCertificate c = is_staircase_connected_convex(p);
    if (c.violating_vertex) {
      report["certificate"] = Json{{"violating_vertex", point_json(*c.violating_vertex)},
                                   {"alpha", std::string(to_string(alpha_class(p, *c.violating_vertex)))}};
    } else {
      Json dirs = Json::array();
      for (const Point2& v : p.vertices()) {
        Json d = Json::array();
        for (Direction dir : cone_contains_axis_dir(p, v)) d.push_back(std::string(to_string(dir)));
        dirs.push_back(Json{{"vertex", point_json(v)}, {"axis_directions", d}});
      }
      report["certificate"] = Json{{"vertices", dirs}};
    }
    std::vector<Point2> marks;
    if (c.violating_vertex) marks.push_back(*c.violating_vertex);
    wb.svg("check-" + args.target, draw_polygons({p}, marks), report);
    return verdict(report, c.staircase_connected);
  }
  if (args.analysis == "obtuse") {
    Json classes = Json::array();
    bool ok = true;
    for (const Point2& v : p.vertices()) {
      const AlphaClass a = alpha_class(p, v);
      ok = ok && a != AlphaClass::Acute;
      classes.push_back(Json{{"vertex", point_json(v)}, {"alpha", std::string(to_string(a))}});
    }
    report["certificate"] = Json{{"vertices", classes}};
    return verdict(report, ok);
  }
  throw UsageError("analysis '" + args.analysis + "' does not apply to a polygon (use staircase, obtuse)");
}

Outcome check_complex(Workbench& wb, const CheckArgs& args, Json report) {
  const RectComplex& c = wb.file().complexes.at(args.target);
  if (args.analysis == "staircase") {
    const StaircaseCertificate cert = is_staircase_connected_exact(c);
    Json cj{{"clause", std::string(to_string(cert.clause))}};
    if (cert.point) cj["point"] = point_json(*cert.point);
    if (!cert.detail.empty()) cj["detail"] = cert.detail;
    report["certificate"] = cj;
    wb.svg("check-" + args.target, draw_complex(c), report);
    return verdict(report, cert.staircase_connected);
  }
  if (args.analysis == "orthogonal-convexity") {
    return verdict(report, is_orthogonally_convex_exact(c));
  }
  if (args.analysis == "unimodal") {
    const HypothesisPolicy policy = args.waive_normality ? HypothesisPolicy::WaiveNormality : HypothesisPolicy::Strict;
    try {
      const UnimodalCheck u = thm_unimodal_check(c, policy);
      report["certificate"] = Json{{"staircase_connected", u.lhs}, {"profiles_unimodal", u.rhs}};
      return verdict(report, u.agree);
    } catch (const HypothesisError& e) {
      throw UsageError("hypothesis '" + std::string(e.clause()) + "' does not hold for '" + args.target +
                       "': " + e.what());
    }
  }
  throw UsageError("analysis '" + args.analysis +
                   "' does not apply to a complex (use staircase, orthogonal-convexity, unimodal)");
}

std::optional<Kind> parse_kind(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "grid") return Kind::Grid;
  if (text == "polygon") return Kind::Polygon;
  if (text == "complex") return Kind::Complex;
  throw UsageError("unknown kind '" + text + "' (use grid, polygon, complex)");
}

Outcome cmd_check(Workbench& wb, const CheckArgs& args) {
  const Kind k = wb.resolve(args.target, {Kind::Grid, Kind::Polygon, Kind::Complex}, parse_kind(args.kind));
  Json report{{"command", "check"}, {"target", args.target}, {"kind", kind_name(k)}, {"analysis", args.analysis}};
  switch (k) {
    case Kind::Grid: return check_grid(wb, args, std::move(report));
    case Kind::Polygon: return check_polygon(wb, args, std::move(report));
    default: return check_complex(wb, args, std::move(report));
  }
}

// ---- distance ----

Outcome cmd_distance(Workbench& wb, const std::string& name, const std::string& from, const std::string& to) {
  wb.resolve(name, {Kind::Grid});
  const GridSet& g = wb.file().grids.at(name);
  const Cell a = parse_cell(from), b = parse_cell(to);
  for (const Cell& c : {a, b}) {
    if (!g.contains(c)) throw UsageError("cell (" + std::to_string(c.col) + "," + std::to_string(c.row) + ") is not in grid '" + name + "'");
  }
  Json report{{"command", "distance"}, {"grid", name}, {"from", cell_json(a)}, {"to", cell_json(b)}};
  const auto d = s_distance(g, a, b);
  if (!d) {
    report["verdict"] = "unreachable";
    wb.svg("distance-" + name, draw_grid(g), report);
    return {report, kExitFail};
  }
  report["links"] = d->links;
  report["witness"] = path_json(d->witness);
  report["verdict"] = "pass";
  wb.svg("distance-" + name, draw_grid(g, &d->witness), report);
  return {report, kExitPass};
}

// ---- route ----

Json route_json(const RouteResult& r) {
  return Json{{"links", r.links}, {"case", std::string(to_string(r.case_tag))}, {"verified", r.verified},
              {"path", path_json(r.path)}};
}

Outcome cmd_route(Workbench& wb, const std::string& name, int query) {
  wb.resolve(name, {Kind::Scene});
  const SceneSpec& spec = wb.file().scenes.at(name);
  if (query < 0 || query >= static_cast<int>(spec.queries.size())) {
    throw UsageError("query index " + std::to_string(query) + " out of range for scene '" + name + "' (" +
                     std::to_string(spec.queries.size()) + " queries)");
  }
  const SceneQuery& q = spec.queries[static_cast<std::size_t>(query)];
  std::optional<RoutingScene> scene;
  try {
    scene.emplace(spec.window, spec.obstacles);
  } catch (const PreconditionError& e) {
    throw UsageError("scene '" + name + "': " + e.what());
  }
  for (const Point2& p : {q.p, q.q}) {
    if (!spec.window.contains(p)) throw UsageError("query endpoint outside the window");
    for (const ConvexPolygon& k : spec.obstacles) {
      if (k.contains(p, Region::Interior)) throw UsageError("query endpoint inside an obstacle");
    }
  }
  Json report{{"command", "route"}, {"scene", name}, {"query", query}, {"p", point_json(q.p)}, {"q", point_json(q.q)}};
  if (spec.obstacles.size() == 1) {
    const RouteResult r = route_around_convex(q.p, q.q, spec.obstacles.front());
    const bool ok = r.verified && verify_path(r.path, *scene);
    report["method"] = "single-obstacle";
    report["route"] = route_json(r);
    wb.svg("route-" + name, draw_scene(spec.window, spec.obstacles, &r.path), report);
    return verdict(report, ok);
  }
  const Scalar cell = spec.cell_size ? *spec.cell_size : Scalar(spec.window.xmax - spec.window.xmin) / 32;
  const MultiRoute m = route_multi(*scene, q.p, q.q, cell);
  report["method"] = "grid";
  Json trace = Json::array();
  for (const RefinementStep& s : m.trace) trace.push_back(Json{{"cell_size", scalar_json(s.cell_size)}, {"found", s.found}});
  report["refinement"] = trace;
  if (m.exhausted()) {
    report["verdict"] = "resolution-exhausted";
    wb.svg("route-" + name, draw_scene(spec.window, spec.obstacles, nullptr), report);
    return {report, kExitFail};
  }
  report["route"] = route_json(*m.route);
  wb.svg("route-" + name, draw_scene(spec.window, spec.obstacles, &m.route->path), report);
  return verdict(report, m.route->verified);
}

// ---- rotate / extreme / profile / rasterize ----

Json map_json(const AffineMap& m) {
  return Json{{"a", scalar_json(m.a)}, {"b", scalar_json(m.b)},  {"c", scalar_json(m.c)},
              {"d", scalar_json(m.d)}, {"tx", scalar_json(m.tx)}, {"ty", scalar_json(m.ty)}};
}

Outcome cmd_rotate(Workbench& wb, const std::string& name) {
  wb.resolve(name, {Kind::Polygon});
  const ConvexPolygon& p = wb.file().polygons.at(name);
  const Rotation r = rotate_to_staircase(p);
  const ConvexCertificate c = is_staircase_connected_convex(r.polygon);
  Json report{{"command", "rotate"}, {"target", name}, {"identity", r.map.is_identity()},
              {"map", map_json(r.map)},  {"polygon", polygon_json(r.polygon)}};
  wb.svg("rotate-" + name, draw_polygons({p, r.polygon}), report);
  return verdict(report, c.staircase_connected && r.map.is_similarity());
}

Outcome cmd_extreme(Workbench& wb, const std::string& name) {
  wb.resolve(name, {Kind::Polygon});
  const ConvexPolygon& p = wb.file().polygons.at(name);
  const std::vector<ExtremePoint> extremes = s_extreme_points(p);
  Json points = Json::array();
  std::vector<Point2> marks;
  for (const ExtremePoint& e : extremes) {
    points.push_back(Json{{"point", point_json(e.point)}, {"reason", std::string(to_string(e.reason))}});
    marks.push_back(e.point);
  }
  Json through = Json::array();
  bool ok = true;
  for (const Point2& v : p.vertices()) {
    if (std::any_of(extremes.begin(), extremes.end(), [&](const ExtremePoint& e) { return e.point == v; })) continue;
    const auto path = staircase_through_vertex(p, v);
    ok = ok && path.has_value();
    if (path) through.push_back(Json{{"vertex", point_json(v)}, {"staircase", path_json(*path)}});
  }
  Json report{{"command", "extreme"}, {"target", name}, {"count", extremes.size()}, {"extreme_points", points},
              {"staircases_through_other_vertices", through}};
  wb.svg("extreme-" + name, draw_polygons({p}, marks), report);
  return verdict(report, ok);
}

Outcome cmd_profile(Workbench& wb, const std::string& name) {
  wb.resolve(name, {Kind::Complex});
  const RectComplex& c = wb.file().complexes.at(name);
  Profiles pr;
  try {
    pr = associated_profiles(c);
  } catch (const PreconditionError& e) {
    throw UsageError("complex '" + name + "': " + e.what());
  }
  const bool up = is_unimodal(pr.f_plus);
  const bool down = is_unimodal(pr.f_minus.negated());
  Json report{{"command", "profile"},
              {"target", name},
              {"f_plus_csv", pr.f_plus.to_csv()},
              {"f_minus_csv", pr.f_minus.to_csv()},
              {"f_plus_unimodal", up},
              {"neg_f_minus_unimodal", down},
              {"normal", pr.normal},
              {"vertically_convex", pr.vertically_convex},
              {"ends", Json{{"f_plus_left", scalar_json(pr.f_plus_left)},
                            {"f_minus_left", scalar_json(pr.f_minus_left)},
                            {"f_plus_right", scalar_json(pr.f_plus_right)},
                            {"f_minus_right", scalar_json(pr.f_minus_right)}}}};
  wb.svg("profile-" + name, draw_profiles(pr.f_plus, pr.f_minus), report);
  return verdict(report, up && down);
}

Outcome cmd_rasterize(Workbench& wb, const std::string& name, const std::string& cell_text) {
  wb.resolve(name, {Kind::Polygon});
  const ConvexPolygon& p = wb.file().polygons.at(name);
  Scalar cell;
  try {
    cell = parse_scalar(cell_text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--cell-size: ") + e.what());
  }
  if (cell <= 0) throw UsageError("--cell-size must be positive");
  Json report{{"command", "rasterize"}, {"target", name}, {"cell_size", scalar_json(cell)}};
  try {
    const GridSet g = rasterize_convex(p, cell);
    report["cells"] = g.cell_count();
    report["grid"] = grid_json(g);
    report["staircase_connected"] = is_staircase_connected(g);
    wb.svg("rasterize-" + name, draw_grid(g), report);
    report["verdict"] = "pass";
    return {report, kExitPass};
  } catch (const EmptyRasterization& e) {
    report["verdict"] = "empty";
    report["detail"] = e.what();
    return {report, kExitFail};
  }
}

// ---- prop ----

Outcome cmd_prop(Workbench& wb, const std::string& suite, int n, int threads, bool list) {
  if (list) {
    Json suites = Json::array();
    for (const std::string& s : suite_names()) suites.push_back(Json{{"name", s}, {"description", suite_description(s)}});
    return {Json{{"command", "prop"}, {"suites", suites}}, kExitPass};
  }
  if (suite.empty()) throw UsageError("--suite is required (see prop --list)");
  if (!has_suite(suite)) throw UsageError("unknown suite '" + suite + "' (see prop --list)");
  if (n < 1) throw UsageError("--n must be positive");
  const SuiteReport r = run_suite(suite, wb.globals().seed, n, threads);
  Json report{{"command", "prop"}, {"description", suite_description(suite)}};
  const Json body = r.to_json();
  for (const auto& [k, v] : body.items()) report[k] = v;
  return {report, r.ok() ? kExitPass : kExitFail};
}

void emit(const Json& report, const Globals& g) {
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!g.json_path.empty()) {
    std::ofstream out(g.json_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + g.json_path + "'");
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staircase connectivity workbench"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--input", globals.input, "Scene file (JSON)");
  app.add_option("--seed", globals.seed, "Seed for property suites");
  app.add_option("--svg", globals.svg_dir, "Directory for SVG figures");
  app.add_option("--json", globals.json_path, "Also write the JSON report here");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide a property of a named target");
  check_cmd->add_option("target", check.target, "Target name")->required();
  check_cmd->add_option("--analysis", check.analysis,
                        "staircase | orthogonal-convexity | orthogonal-connectivity | holes | obtuse | unimodal");
  check_cmd->add_option("--kind", check.kind, "grid | polygon | complex, when the name is ambiguous");
  check_cmd->add_flag("--waive-normality", check.waive_normality, "Skip the normality hypothesis of the unimodal check");

  std::string target, from, to, cell_size = "1", suite;
  int query = 0, n = 100, threads = 0;
  bool list = false;
  auto* distance_cmd = app.add_subcommand("distance", "Link distance between two grid cells");
  distance_cmd->add_option("grid", target, "Grid name")->required();
  distance_cmd->add_option("--from", from, "COL,ROW")->required();
  distance_cmd->add_option("--to", to, "COL,ROW")->required();

  auto* route_cmd = app.add_subcommand("route", "Orthogonal route for a scene query");
  route_cmd->add_option("scene", target, "Scene name")->required();
  route_cmd->add_option("--query", query, "Query index");

  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate a polygon to become staircase connected");
  rotate_cmd->add_option("target", target, "Polygon name")->required();
  auto* extreme_cmd = app.add_subcommand("extreme", "List the s-extreme points of a polygon");
  extreme_cmd->add_option("target", target, "Polygon name")->required();
  auto* profile_cmd = app.add_subcommand("profile", "Boundary profiles of a rectangle complex");
  profile_cmd->add_option("target", target, "Complex name")->required();
  auto* rasterize_cmd = app.add_subcommand("rasterize", "Rasterize a polygon to grid cells");
  rasterize_cmd->add_option("target", target, "Polygon name")->required();
  rasterize_cmd->add_option("--cell-size", cell_size, "Rational cell size");

  auto* prop_cmd = app.add_subcommand("prop", "Run a seeded property suite");
  prop_cmd->add_option("--suite", suite, "Suite name");
  prop_cmd->add_option("--n", n, "Number of cases");
  prop_cmd->add_option("--threads", threads, "Worker threads (default: STAIRCASE_THREADS or hardware)");
  prop_cmd->add_flag("--list", list, "List the registered suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Workbench wb(globals);
  try {
    Outcome out;
    if (*check_cmd) out = cmd_check(wb, check);
    else if (*distance_cmd) out = cmd_distance(wb, target, from, to);
    else if (*route_cmd) out = cmd_route(wb, target, query);
    else if (*rotate_cmd) out = cmd_rotate(wb, target);
    else if (*extreme_cmd) out = cmd_extreme(wb, target);
    else if (*profile_cmd) out = cmd_profile(wb, target);
    else if (*rasterize_cmd) out = cmd_rasterize(wb, target, cell_size);
    else out = cmd_prop(wb, suite, n, threads, list);
    emit(out.report, globals);
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
