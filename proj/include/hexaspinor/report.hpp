#pragma once

#include <string>
#include <vector>

namespace hexaspinor {

struct Check {
  std::string name;
  double residual = 0;
  double threshold = 0;
  bool pass = false;
};

// One verification suite: named residuals against pinned thresholds.
struct Report {
  std::string suite;
  std::vector<Check> checks;
  double duration_ms = 0;

  Check& add(const std::string& name, double residual, double threshold) {
    checks.push_back({name, residual, threshold, residual <= threshold});
    return checks.back();
  }

  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// JSON lines, one check per line, float format with 17 significant digits.
std::string to_json_lines(const Report& r);

}  // namespace hexaspinor
