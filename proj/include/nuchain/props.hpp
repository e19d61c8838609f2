#ifndef NUCHAIN_PROPS_HPP
#define NUCHAIN_PROPS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nuchain {

struct PropsConfig {
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  unsigned depth = 12;
};

struct PropResult {
  std::string suite;
  bool pass = false;
  std::uint64_t checks = 0;
  std::string detail;  // witness on failure, summary otherwise
  double seconds = 0.0;
};

// Proposition suites runnable by name; `acceptance` marks the ten suites
// that make up the acceptance matrix, in order.
std::vector<std::string> suite_names();
std::vector<std::string> acceptance_suite_names();
// Time budget in seconds for an acceptance suite (0 = none).
double acceptance_budget(const std::string& suite);

PropResult run_suite(const std::string& name, const PropsConfig& cfg);

}  // namespace nuchain

#endif
