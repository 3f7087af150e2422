#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cmc/quiver.hpp"
#include "cmc/repvar.hpp"

namespace cmc {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit = 0;  // seconds, 0 = none
  long checks = 0;
  std::string detail;  // first failure, or a summary
};

/// Runs acceptance criterion `id` (1..11).
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_line(const CriterionResult& r);

/// CM point with a random distinct integer spectrum and random Y diagonal.
CMPoint random_cm(int n, std::mt19937_64& rng);

/// Positive roots in [0, B]^I by closure of the fundamental region and the
/// real simple roots under simple reflections (an independent oracle for
/// is_positive_root).
std::set<DimVector> brute_force_roots(const Quiver& q, long B);

}  // namespace cmc
