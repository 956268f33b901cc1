// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Counts and tolerances are pinned inside the verify suites; the runtime
// budgets are enforced here.

#include <cstdio>
#include <string>
#include <vector>

#include "ballproj/verify.hpp"

namespace {

struct Criterion {
  std::string label;
  std::vector<ballproj::verify::SuiteResult> results;
  double budget_s = 0.0;  // 0 = no budget
};

bool report(const Criterion& c, int index) {
  long checks = 0;
  long failures = 0;
  double elapsed = 0.0;
  for (const auto& r : c.results) {
    checks += r.checks;
    failures += r.failures;
    elapsed += r.elapsed_s;
  }
  const bool in_budget = c.budget_s == 0.0 || elapsed < c.budget_s;
  const bool pass = failures == 0 && in_budget;
  std::printf("[%d] %-58s %s  (%ld checks, %ld failures, %.3f s)\n", index,
              c.label.c_str(), pass ? "PASS" : "FAIL", checks, failures,
              elapsed);
  if (!in_budget) {
    std::printf("    exceeded runtime budget of %.0f s\n", c.budget_s);
  }
  for (const auto& r : c.results) {
    for (const std::string& note : r.failure_notes) {
      std::printf("    %s: %s\n", r.name.c_str(), note.c_str());
    }
    for (const std::string& note : r.diagnostics) {
      std::printf("    %s (diagnostic): %s\n", r.name.c_str(), note.c_str());
    }
  }
  return pass;
}

}  // namespace

int main() {
  using namespace ballproj::verify;
  const Options opt;  // seed 0 and the pinned acceptance counts

  std::vector<Criterion> criteria;
  criteria.push_back({"1d coderivative case table", {check_coderivative_table_1d()}, 1.0});
  criteria.push_back({"1d graphical derivative case table", {check_graphical_table_1d()}, 1.0});
  criteria.push_back({"oracle concordance (members accepted, off-set points certified)",
                      {check_oracle_concordance(opt)},
                      60.0});
  criteria.push_back({"finite-difference consistency of the directional derivative",
                      {check_fd_consistency(opt)},
                      30.0});
  criteria.push_back({"projection properties and translation covariance",
                      {check_projection_properties(opt), check_translation_covariance(opt)},
                      30.0});
  criteria.push_back({"boundary special cases (zero, radial, 0-membership)",
                      {check_boundary_special_cases(opt)},
                      0.0});
  criteria.push_back({"boundary segment constraint audit",
                      {check_segment_constraints(opt)},
                      0.0});

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!report(criteria[i], static_cast<int>(i) + 1)) all_pass = false;
  }
  std::printf("%s\n", all_pass ? "acceptance: PASS" : "acceptance: FAIL");
  return all_pass ? 0 : 1;
}
