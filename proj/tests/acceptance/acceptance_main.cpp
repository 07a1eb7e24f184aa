// Runs the reproduction suite and prints one pass/fail line per criterion.
// Exits 0 only when every underlying check passes.

#include <cstdio>
#include <string>
#include <vector>

#include "uebforge/reproduce.hpp"

int main() {
  std::vector<uebforge::CheckResult> results;
  try {
    results = uebforge::run_reproduction();
  } catch (const std::exception& e) {
    std::printf("FAIL  reproduction suite raised: %s\n", e.what());
    return 1;
  }

  // Group subchecks that share a criterion (the property suites) into one
  // line, preserving execution order.
  struct Line {
    std::string group;
    int total = 0;
    int passed = 0;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string first_name;
  };
  std::vector<Line> lines;
  for (const auto& r : results) {
    if (lines.empty() || lines.back().group != r.group) {
      lines.push_back({r.group, 0, 0, r.measured, r.tolerance, r.name});
    }
    Line& l = lines.back();
    ++l.total;
    l.passed += r.pass ? 1 : 0;
    if (r.measured > l.measured) {
      l.measured = r.measured;
      l.tolerance = r.tolerance;
    }
  }

  bool all_pass = true;
  int idx = 0;
  for (const Line& l : lines) {
    ++idx;
    bool ok = l.passed == l.total;
    all_pass = all_pass && ok;
    if (l.total == 1) {
      std::printf("%s  criterion %2d  %-24s  measured %.3e  tolerance %.3e\n",
                  ok ? "PASS" : "FAIL", idx, l.group.c_str(), l.measured,
                  l.tolerance);
    } else {
      std::printf(
          "%s  criterion %2d  %-24s  %d/%d subchecks, worst headline %.3e\n",
          ok ? "PASS" : "FAIL", idx, l.group.c_str(), l.passed, l.total,
          l.measured);
    }
  }
  std::printf("%s: %d criteria evaluated\n", all_pass ? "PASS" : "FAIL", idx);
  return all_pass ? 0 : 1;
}
