#pragma once

#include <string>
#include <vector>

namespace budgetagg::cli {

struct ReproResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;  // "what: expected X, actual Y"
};

// thm1-hamilton, thm1-quota, thm1-divisor-tie, thm1-divisor, prop1,
// sec4-ceiling, thm4-ejr, table2-linked
const std::vector<std::string>& repro_case_names();

// Throws std::invalid_argument for an unknown name.
ReproResult run_repro_case(const std::string& name);

}  // namespace budgetagg::cli
