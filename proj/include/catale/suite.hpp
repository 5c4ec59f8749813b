#ifndef CATALE_SUITE_HPP_
#define CATALE_SUITE_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace catale {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance suite, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace catale

#endif  // CATALE_SUITE_HPP_
