#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "staircase/generators.hpp"
#include "staircase/scene.hpp"
#include "staircase/suites.hpp"
#include "staircase/svg.hpp"
#include "test_util.hpp"

using namespace staircase;
using namespace staircase::test;

namespace {

const std::string kWorkbench = STAIRCASE_TEST_DATA "/workbench.json";

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string out_path = (std::filesystem::temp_directory_path() / "staircase_cli_test.out").string();
  const std::string cmd = std::string(STAIRCASE_CLI) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream text;
  text << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

Json cli_json(const std::string& args, int expected_code) {
  const Run r = cli("--input " + kWorkbench + " " + args);
  INFO(r.out);
  CHECK(r.code == expected_code);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("scene file round trip") {
  const SceneFile f = SceneFile::load(kWorkbench);
  CHECK(f.grids.size() == 5);
  CHECK(f.polygons.count("sliver") == 1);
  CHECK(f.polygons.at("sliver").vertex(1) == P("7/2", "1/2"));
  CHECK(f.scenes.at("two_blocks").cell_size == Scalar(1));
  const SceneFile again = SceneFile::parse(f.dump());
  CHECK(again == f);
  CHECK(again.dump() == f.dump());
}

TEST_CASE("scene file rejections") {
  CHECK_THROWS_AS(SceneFile::parse("{"), ParseError);
  CHECK_THROWS_AS(SceneFile::parse(R"({"extra": {}})"), ParseError);
  CHECK_THROWS_AS(SceneFile::parse(R"({"polygons": {"a": [[0,0],[1,0],[0,1]], "a": [[0,0],[1,0],[0,1]]}})"), ParseError);
  CHECK_THROWS_AS(SceneFile::parse(R"({"polygons": {"a": [[0,0],[1,0],["x",1]]}})"), ParseError);
  CHECK_THROWS_AS(SceneFile::parse(R"({"polygons": {"a": [[0,0],[1,0],[0.5,1]]}})"), ParseError);
  CHECK_THROWS_AS(SceneFile::parse(R"({"grids": {"g": {"rows": ["#"], "colour": 1}}})"), ParseError);
  CHECK_THROWS_AS(SceneFile::parse(R"({"polygons": {"cw": [[0,0],[0,1],[1,0]]}})"), ParseError);
  CHECK_THROWS_AS(SceneFile::parse(R"({"scenes": {"s": {"window": [0,0,1,1], "cell_size": "0"}}})"), ParseError);
  CHECK_NOTHROW(SceneFile::parse(R"({"complexes": {"c": [[0,0,"1/2",1]]}})"));
}

TEST_CASE("random scene files round trip") {
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    SceneFile f;
    f.grids.emplace("g", random_grid(rng(), 5, 4, 0.5));
    f.polygons.emplace("p", random_convex_polygon(rng));
    f.complexes.emplace("c", random_connected_complex(rng));
    const MultiRouteCase m = random_multi_route_case(rng);
    f.scenes.emplace("s", SceneSpec{m.scene.window(), m.scene.obstacles(), {{m.p, m.q}}, m.cell_size});
    CHECK(SceneFile::parse(f.dump()) == f);
  }
}

TEST_CASE("svg output") {
  SvgCanvas canvas({Scalar(0), Scalar(0), Scalar(10), Scalar(5)});
  canvas.dot(P(0, 5), 2, "fill:red");
  const std::string s = canvas.str();
  CHECK(s.find("y axis flipped") != std::string::npos);
  CHECK(s.find("<circle cx=\"20.000\" cy=\"20.000\"") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}

TEST_CASE("suite registry") {
  const std::vector<std::string> names = suite_names();
  CHECK(names.size() >= 17);
  CHECK(has_suite("lemma41-equivalence"));
  CHECK_FALSE(has_suite("nope"));
  CHECK_THROWS_AS(run_suite("nope", 1, 1), PreconditionError);
  CHECK_THROWS_AS(run_suite("thm51-obtuse", 1, 0), PreconditionError);
}

TEST_CASE("suite reports do not depend on the thread count") {
  for (const char* name : {"lemma41-equivalence", "thm53-rotate", "rect-repartition"}) {
    const SuiteReport one = run_suite(name, 3, 24, 1);
    const SuiteReport four = run_suite(name, 3, 24, 4);
    CHECK(one.to_json().dump() == four.to_json().dump());
    CHECK(one.ok());
  }
}

TEST_CASE("failing suites report a shrunk counterexample") {
  const SuiteReport r = run_suite("thm61-unimodal", 1, 2, 1);
  CHECK_FALSE(r.ok());
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == 0);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->contains("complexes"));
  CHECK_NOTHROW(SceneFile::parse(r.counterexample->dump()));
}

TEST_CASE("cli: check") {
  CHECK(cli_json("check plus", 0)["verdict"] == "pass");
  const Json thin = cli_json("check thin_tri", 1);
  CHECK(thin["verdict"] == "fail");
  CHECK(thin["certificate"].contains("violating_vertex"));
  CHECK(cli_json("check u_pentomino", 1)["certificate"].contains("no_staircase_between"));
  CHECK(cli_json("check ring --analysis holes", 1)["certificate"]["bounded_complement_components"] == 1);
  CHECK(cli_json("check hexagon --analysis obtuse", 0)["verdict"] == "pass");
  CHECK(cli_json("check corner_touch", 0)["certificate"]["clause"] == "pass");
  CHECK(cli_json("check notch", 1)["certificate"]["clause"] == "orthogonal-convexity");
  CHECK(cli("--input " + kWorkbench + " check").code == 2);
  CHECK(cli("--input " + kWorkbench + " check missing").code == 2);
  CHECK(cli("--input " + kWorkbench + " check plus --analysis obtuse").code == 2);
  CHECK(cli("--input " + kWorkbench + " check tent --analysis unimodal").code == 2);
  CHECK(cli_json("check tent --analysis unimodal --waive-normality", 0)["verdict"] == "pass");
  CHECK(cli("check plus").code == 2);
  CHECK(cli("--input /nonexistent.json check plus").code == 2);
}

TEST_CASE("cli: distance") {
  CHECK(cli_json("distance full_rect --from 0,0 --to 3,2", 0)["links"] == 2);
  CHECK(cli_json("distance u_pentomino --from 0,1 --to 2,1", 0)["links"] == 3);
  CHECK(cli_json("distance split --from 0,0 --to 2,0", 1)["verdict"] == "unreachable");
  CHECK(cli("--input " + kWorkbench + " distance split --from 1,0 --to 2,0").code == 2);
  CHECK(cli("--input " + kWorkbench + " distance square --from 0,0 --to 1,0").code == 2);
}

TEST_CASE("cli: route") {
  for (int q = 0; q < 3; ++q) {
    const Json r = cli_json("route single_square --query " + std::to_string(q), 0);
    CHECK(r["route"]["links"].get<int>() <= 4);
    CHECK(r["route"]["verified"] == true);
  }
  CHECK(cli_json("route empty", 0)["route"]["links"].get<int>() <= 2);
  CHECK(cli_json("route two_blocks --query 1", 0)["route"]["verified"] == true);
  CHECK(cli("--input " + kWorkbench + " route single_square --query 3").code == 2);
}

TEST_CASE("cli: rotate, extreme, profile, rasterize") {
  const Json rot = cli_json("rotate square", 0);
  CHECK(rot["identity"] == true);
  CHECK(cli_json("rotate thin_tri", 0)["identity"] == false);
  CHECK(cli_json("extreme diamond", 0)["count"] == 4);
  const Json prof = cli_json("profile tent", 0);
  CHECK(prof["f_plus_unimodal"] == true);
  CHECK(prof["neg_f_minus_unimodal"] == true);
  CHECK(prof["f_plus_csv"] == "breakpoint,value\n0,1\n1,2\n2,1\n3,1\n");
  CHECK(cli("--input " + kWorkbench + " profile square").code == 2);
  CHECK(cli("--input " + kWorkbench + " extreme tent").code == 2);
  const Json ras = cli_json("rasterize square --cell-size 1/2", 0);
  CHECK(ras["cells"] == 64);
  CHECK(cli_json("rasterize sliver --cell-size 100", 1)["verdict"] == "empty");
}

TEST_CASE("cli: prop") {
  const Run r = cli("--seed 7 prop --suite thm51-obtuse --n 20");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == 20);
  CHECK(j["status"] == "pass");
  CHECK(cli("prop --suite nope").code == 2);
  CHECK(cli("prop --list").code == 0);
  CHECK(cli("--seed 1 prop --suite thm61-unimodal --n 1").code == 1);
}

TEST_CASE("cli: svg and json outputs") {
  const auto dir = std::filesystem::temp_directory_path() / "staircase_svg_test";
  std::filesystem::remove_all(dir);
  const std::string json_path = (dir / "report.json").string();
  std::filesystem::create_directories(dir);
  const Run r = cli("--input " + kWorkbench + " --svg " + dir.string() + " --json " + json_path + " route two_blocks");
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "route-two_blocks.svg"));
  std::ifstream in(json_path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == r.out);
}
