// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <iostream>

#include "weyl/acceptance.hpp"

int main() {
  auto results = weyl::run_acceptance();
  std::cout << weyl::acceptance_lines(results);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass();
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
