// Runs the acceptance criteria and fails the process if any criterion fails.

#include <iostream>

#include "catale/suite.hpp"

int main() {
  const auto results = catale::run_acceptance(std::cout);
  const bool ok = catale::all_passed(results);
  std::cout << (ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
  return ok ? 0 : 1;
}
