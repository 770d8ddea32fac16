#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "staircase/scene.hpp"

namespace staircase {

struct CaseOutcome {
  enum class Kind { Pass, Skip, Fail };
  Kind kind = Kind::Pass;
  std::string detail;

  static CaseOutcome pass() { return {Kind::Pass, {}}; }
  static CaseOutcome skip(std::string why) { return {Kind::Skip, std::move(why)}; }
  static CaseOutcome fail(std::string why) { return {Kind::Fail, std::move(why)}; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int n = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::optional<int> first_failure;  // case index
  std::string failure_detail;
  std::optional<Json> counterexample;  // shrunk, as a scene file fragment

  bool ok() const { return failed == 0; }
  Json to_json() const;
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
std::string suite_description(const std::string& name);

// STAIRCASE_THREADS if set to a positive integer, else the hardware
// concurrency, else 1.
int default_threads();

// Runs cases 0..n-1; case i draws from case_seed(seed, i). The report is
// independent of the thread count. Throws PreconditionError for an
// unknown suite or n < 1.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int n, int threads = 0);

}  // namespace staircase
