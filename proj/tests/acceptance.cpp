#include <iostream>

#include "vertexid/acceptance.hpp"

int main() {
  const auto results = vertexid::run_acceptance(1, [](const vertexid::CriterionResult& r) {
    std::cout << r.to_line() << std::endl;
  });
  int failed = 0;
  for (const auto& r : results) failed += r.passed() ? 0 : 1;
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << '/' << results.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
