// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "cmc/acceptance.hpp"

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  auto report = [&](const cmc::CriterionResult& r) {
    std::cout << cmc::format_line(r) << std::endl;
    all = all && r.passed;
  };
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) report(cmc::run_criterion(std::atoi(argv[i])));
  } else {
    cmc::run_all(report);
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s total %.2fs (limit 300s)\n", all && total < 300 ? "PASS" : "FAIL", total);
  return all && total < 300 ? 0 : 1;
}
