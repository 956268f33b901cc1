#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ballproj/coderivative.hpp"
#include "ballproj/oracle.hpp"

namespace ballproj::verify {

// Instance counts for the randomized suites. The defaults are the counts the
// acceptance gate runs with.
struct Options {
  std::uint64_t seed = 0;
  int oracle_count = 500;  // instances per region
  int fd_count = 500;
  int property_pairs = 10000;
  int covariance_count = 1000;
  int boundary_count = 100;
  int segment_count = 1000;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> failure_notes;  // first few failures
  std::vector<std::string> diagnostics;    // non-fatal notes (oracle misses)
  double elapsed_s = 0.0;

  bool passed() const { return failures == 0; }
};

// Worked 1D case table of the regular coderivative on [-1, 1]:
// {y} inside, {0} outside, [y,0] at +1 for y <= 0, [0,y] at -1 for y >= 0,
// empty otherwise. Endpoints compared to 1e-12.
SuiteResult check_coderivative_table_1d();

// Worked 1D case table of the graphical derivative: {y} inside and on the
// entering side of each endpoint, {0} outside and on the leaving side.
SuiteResult check_graphical_table_1d();

// Fixed worked cases with pinned expected values (1D and 2D).
SuiteResult check_fixed_cases();

// Every closed-form coderivative element (singleton value, segment endpoints
// and midpoint) must pass the sampled limsup oracle; points displaced by 0.1
// off the set must be certified non-members in at least 95% of instances.
SuiteResult check_oracle_concordance(const Options& opt);

// Forward differences of project() against gateaux(): error within
// 10*t*(1+||u||^2) for t in {1e-2,...,1e-6} and halving per decade until it
// reaches the roundoff floor.
SuiteResult check_fd_consistency(const Options& opt);

// Nonexpansiveness and idempotence of project() over random pairs.
SuiteResult check_projection_properties(const Options& opt);

// project and regular_coderivative commute with recentering the ball at the
// origin: P_{B(c,r)}(x) = c + P_{B(0,r)}(x-c) and the coderivative sets agree.
SuiteResult check_translation_covariance(const Options& opt);

// Boundary degeneracies at random boundary points: y = 0 gives {0}, the
// radial direction gives the empty set, and the closed-form test for
// 0-membership agrees with set_membership on vectors built to pass and fail.
SuiteResult check_boundary_special_cases(const Options& opt);

// Segment samples satisfy the two boundary constraints
// <y,s> <= <z,s> <= 0 and y - z parallel to s within 1e-10.
SuiteResult check_segment_constraints(const Options& opt);

// which: "examples" (case tables + fixed cases), "oracle", "properties"
// (fd, projection, covariance, boundary, segment), or "all".
std::vector<SuiteResult> run_suite(const std::string& which, const Options& opt);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace ballproj::verify
