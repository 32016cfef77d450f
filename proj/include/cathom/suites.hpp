#pragma once

#include <string>
#include <vector>

#include "cathom/corpus.hpp"

namespace cathom {

struct Check {
  std::string id;
  bool pass = false;
  std::string witness; // empty when the check passes
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool all_pass() const;
};

/// Suite names: skeleton, theta, lambda, adjunction, thm62, nat-variant, all.
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, int dim_cap, long budget);

} // namespace cathom
