#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dyonosc {

enum class Suite { euler, matrices, duality, degeneracy, fields, odes, oracle, normalization, specfun, all };

/// Throws Errc::invalid_parameter for unknown names.
Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);
/// Every suite except `all`, in run order.
std::vector<Suite> all_suites();

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Runs the checks of one suite (or all). Randomized checks draw from a
/// generator seeded with `seed`, so results are reproducible.
std::vector<CheckResult> run_suite(Suite suite, std::uint64_t seed = 42);

}  // namespace dyonosc
