#include "dualbraid/report.hpp"

#include <cstdio>
#include <sstream>

namespace dualbraid {

namespace {

template <typename T>
std::string poly_str(const std::vector<T>& coeffs) {
  std::stringstream ss;
  ss << "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) ss << (i ? "," : "") << coeffs[i];
  ss << "]";
  return ss.str();
}

}  // namespace

std::string poly_to_string(const std::vector<long>& coeffs) { return poly_str(coeffs); }
std::string poly_to_string(const std::vector<Int>& coeffs) { return poly_str(coeffs); }

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

void print_results(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    std::printf("%s %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.details.c_str(), r.seconds);
}

}  // namespace dualbraid
