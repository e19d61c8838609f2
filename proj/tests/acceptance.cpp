// Acceptance matrix: one line per criterion, PASS only when the suite holds
// with zero violations inside its time budget.

#include <cstdio>
#include <exception>

#include "nuchain/props.hpp"

int main() {
  nuchain::PropsConfig cfg;  // seed 0, 10^5 samples, depth 12
  bool all = true;
  auto names = nuchain::acceptance_suite_names();
  for (std::size_t k = 0; k < names.size(); ++k) {
    double budget = nuchain::acceptance_budget(names[k]);
    nuchain::PropResult r;
    try {
      r = nuchain::run_suite(names[k], cfg);
    } catch (const std::exception& e) {
      std::printf("[%2zu] %-30s FAIL (exception: %s)\n", k + 1,
                  names[k].c_str(), e.what());
      all = false;
      continue;
    }
    bool in_budget = r.seconds < budget;
    bool ok = r.pass && in_budget;
    all = all && ok;
    std::printf("[%2zu] %-30s %s (%llu checks, %.2fs < %.0fs)%s%s\n", k + 1,
                names[k].c_str(), ok ? "PASS" : "FAIL",
                static_cast<unsigned long long>(r.checks), r.seconds, budget,
                r.pass ? "" : " witness: ", r.pass ? "" : r.detail.c_str());
    if (r.pass && !in_budget)
      std::printf("     over budget: %.2fs >= %.0fs\n", r.seconds, budget);
  }
  std::printf("%s\n", all ? "acceptance: all criteria PASS"
                          : "acceptance: FAIL");
  return all ? 0 : 1;
}
