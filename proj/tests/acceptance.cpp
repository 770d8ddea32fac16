#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "staircase/generators.hpp"
#include "staircase/rect_complex.hpp"
#include "staircase/suites.hpp"

using namespace staircase;

namespace {

constexpr std::uint64_t kSeed = 7;

// Runtime limits in seconds.
constexpr double kLimitLemmaEquivalence = 60;
constexpr double kLimitLinkBound = 120;
constexpr double kLimitCarveAndRoute = 120;

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string summary(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << " " << r.passed << "/" << r.n << " passed";
  if (r.skipped) os << ", " << r.skipped << " skipped";
  if (r.first_failure) os << ", first failure case " << *r.first_failure << ": " << r.failure_detail;
  return os.str();
}

bool all_passed(const SuiteReport& r) { return r.failed == 0 && r.skipped == 0 && r.passed == r.n; }

Verdict suite_within(const std::string& suite, int n, double limit) {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport r = run_suite(suite, kSeed, n);
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << summary(r) << " in " << secs << " s";
  if (limit > 0) os << " (limit " << limit << " s)";
  return {all_passed(r) && (limit <= 0 || secs < limit), os.str()};
}

Verdict lemma_equivalence() { return suite_within("lemma41-equivalence", 1000, kLimitLemmaEquivalence); }

// 200 polygons with 50 exterior pairs each.
Verdict link_bound() { return suite_within("thm31-linkbound", 200, kLimitLinkBound); }

Verdict no_bounded_complement() { return suite_within("thm42-no-bounded-complement", 500, 0); }

Verdict carve_and_route() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport carve = run_suite("thm33-carve", kSeed, 200);
  const SuiteReport route = run_suite("thm34-multi-route", kSeed, 200);
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << summary(carve) << "; " << summary(route) << "; " << secs << " s (limit " << kLimitCarveAndRoute << " s)";
  return {all_passed(carve) && all_passed(route) && secs < kLimitCarveAndRoute, os.str()};
}

Verdict obtuse_and_rotate() {
  const SuiteReport obtuse = run_suite("thm51-obtuse", kSeed, 500);
  const SuiteReport rotate = run_suite("thm53-rotate", kSeed, 500);
  return {all_passed(obtuse) && all_passed(rotate), summary(obtuse) + "; " + summary(rotate)};
}

Verdict unimodal() {
  const SuiteReport strict = run_suite("thm61-unimodal", kSeed, 300);
  const SuiteReport relaxed = run_suite("thm61-unimodal-relaxed", kSeed, 300);
  return {all_passed(strict), summary(strict) + " [info, normality waived: " + summary(relaxed) + "]"};
}

Verdict extreme_points() { return suite_within("thm71-extreme", 300, 0); }

Verdict rect_oracle() {
  const SuiteReport r = run_suite("rect-oracle", kSeed, 300);
  // Coverage of the generated instances, regenerated from the same seeds.
  int degenerate = 0;
  for (int i = 0; i < 300; ++i) {
    Rng rng(case_seed(kSeed, static_cast<std::uint64_t>(i)));
    if (random_connected_complex(rng, 8).has_degenerate()) ++degenerate;
  }
  // Fixtures: corner touch, corridor, four quadrants meeting at a point.
  const auto R = [](long x0, long y0, long x1, long y1) {
    return Rect{Scalar(x0), Scalar(y0), Scalar(x1), Scalar(y1)};
  };
  const std::vector<RectComplex> fixtures{
      RectComplex({R(0, 0, 1, 1), R(1, 1, 2, 2)}),
      RectComplex({R(0, 0, 1, 1), R(1, 1, 2, 1), R(2, 1, 3, 2)}),
      RectComplex({R(0, 0, 1, 1), R(-1, 0, 0, 1), R(-1, -1, 0, 0), R(0, -1, 1, 0)}),
      RectComplex({R(0, 0, 3, 1), R(0, 1, 1, 2), R(2, 1, 3, 2)}),
  };
  int fixtures_ok = 0;
  for (const RectComplex& f : fixtures) {
    if (is_staircase_connected_exact(f).staircase_connected == staircase_oracle_all_pairs(f)) ++fixtures_ok;
  }
  std::ostringstream os;
  os << summary(r) << "; " << degenerate << " instances with degenerate rectangles; fixtures " << fixtures_ok << "/"
     << fixtures.size() << " agree";
  return {all_passed(r) && fixtures_ok == static_cast<int>(fixtures.size()) && degenerate > 0, os.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "staircase_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> reports;
  for (const char* threads : {"1", "4"}) {
    for (int run = 0; run < 2; ++run) {
      const auto out = dir / ("report_" + std::string(threads) + "_" + std::to_string(run) + ".json");
      std::filesystem::remove(out);
      const std::string cmd = "STAIRCASE_THREADS=" + std::string(threads) + " " + STAIRCASE_CLI +
                              " --seed 7 --json " + out.string() + " prop --suite lemma41-equivalence --n 200 > /dev/null";
      if (std::system(cmd.c_str()) != 0) return {false, "cli run failed: " + cmd};
      reports.push_back(slurp(out));
    }
  }
  bool same = !reports.front().empty();
  for (const std::string& r : reports) same = same && r == reports.front();
  return {same, std::to_string(reports.size()) + " runs (1 and 4 threads), " + std::to_string(reports.front().size()) +
                    " bytes each, " + (same ? "byte-identical" : "different")};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "grid staircase equivalence on 1000 grids", lemma_equivalence},
      {2, "at most four links around one convex polygon, 10000 queries", link_bound},
      {3, "no bounded complement component on 500 staircase grids", no_bounded_complement},
      {4, "carving and multi-obstacle routing, 200 + 200 instances", carve_and_route},
      {5, "obtuse polygons and rotated polygons certified, 500 + 500", obtuse_and_rotate},
      {6, "profile unimodality on 300 normal vertically convex complexes", unimodal},
      {7, "s-extreme points and staircases through other vertices, 300 polygons", extreme_points},
      {8, "exact rectangle decision equals the arrangement oracle, 300 complexes", rect_oracle},
      {9, "prop reports are byte-identical across runs", determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  bool ok = true;
  bool ran = false;
  for (const Criterion& c : criteria()) {
    if (only && c.id != only) continue;
    ran = true;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << c.id << " [" << (v.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << v.detail
              << std::endl;
    ok = ok && v.pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return ok ? 0 : 1;
}
