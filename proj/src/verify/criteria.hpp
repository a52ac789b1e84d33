#pragma once

#include <string>
#include <vector>

namespace whitt::verify {

constexpr int kCriteriaCount = 10;

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs one acceptance check (1..kCriteriaCount).  Never throws; an exception
/// inside a check is reported as a failure.
Result run_criterion(int id);
std::vector<Result> run_all();

}  // namespace whitt::verify
