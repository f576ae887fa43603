#pragma once

#include <string>
#include <vector>

#include "nmds/code.hpp"
#include "nmds/serialize.hpp"

namespace nmds::suites {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;  // wall-clock ceiling; exceeding it fails the criterion
  std::size_t items = 0;     // families / lemmas / rows checked
  std::vector<std::string> failures;
  Json details = Json::array();
};

inline constexpr int kCriterionCount = 9;

// Runs one acceptance criterion (1..9). Never throws for verification
// failures; those are recorded in `failures`.
CriterionResult run_criterion(int id, const Budget& budget);

Json to_json(const CriterionResult& r);

}  // namespace nmds::suites
