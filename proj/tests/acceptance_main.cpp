// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Thread count comes from DUALBRAID_THREADS (default 1).

#include <cstdio>

#include "dualbraid/verify.hpp"

int main() {
  using namespace dualbraid;
  VerifyOptions opts;
  opts.threads = thread_count_from_env();
  std::printf("acceptance suite (threads=%d, seed=%llu)\n", opts.threads,
              static_cast<unsigned long long>(opts.seed));
  std::fflush(stdout);
  auto results = run_acceptance(opts);
  print_results(results);
  bool ok = all_pass(results);
  std::printf("%s\n", ok ? "ACCEPTANCE: all criteria pass"
                         : "ACCEPTANCE: FAILURES PRESENT");
  return ok ? 0 : 1;
}
