#pragma once

#include <cstdint>
#include <memory>

#include "dualbraid/cluster.hpp"
#include "dualbraid/dual_algebra.hpp"
#include "dualbraid/garside.hpp"
#include "dualbraid/nichols.hpp"
#include "dualbraid/orlik_solomon.hpp"
#include "dualbraid/report.hpp"
#include "dualbraid/resolution.hpp"

namespace dualbraid {

/// Everything the checks need for one (group, Coxeter word) configuration,
/// built once and shared.
struct GroupContext {
  explicit GroupContext(const GroupSpec& spec);
  GroupSpec spec;
  std::unique_ptr<CoxeterGroup> g;
  std::unique_ptr<NCLattice> L;
  ReflOrdering order;
  std::unique_ptr<PositiveComplex> C;
  std::unique_ptr<DualMonoid> M;
  std::unique_ptr<DualAlgebra> P;
  std::unique_ptr<NicholsAlgebra> N;
};

struct VerifyOptions {
  int threads = 1;
  std::uint64_t seed = 0x5eed5eedULL;
  int resolution_degree = 4;
  int series_degree = 6;
  bool enforce_time_limits = true;
};

/// The full acceptance suite: one result per criterion (plus sub-results in
/// the details strings).
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts);

/// verify-all for a single group: every check that applies to it.
std::vector<CheckResult> run_group_suite(const GroupSpec& spec,
                                         const VerifyOptions& opts);

int thread_count_from_env();

}  // namespace dualbraid
