#pragma once

#include <string>
#include <vector>

#include "dualbraid/matrix.hpp"

namespace dualbraid {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

std::string poly_to_string(const std::vector<long>& coeffs);
std::string poly_to_string(const std::vector<Int>& coeffs);
bool all_pass(const std::vector<CheckResult>& results);
/// One "PASS name: details" line per result.
void print_results(const std::vector<CheckResult>& results);

}  // namespace dualbraid
