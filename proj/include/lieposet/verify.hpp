#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lieposet/poset.hpp"
#include "lieposet/rank.hpp"

namespace lieposet {

inline constexpr int kMaxEnumerationSize = 7;

// Stream every naturally labeled poset on {1..n} exactly once, in a fixed
// deterministic order. Throws ResourceBound above kMaxEnumerationSize.
void enumerate_posets(int n, const std::function<void(const Poset&)>& visit);
std::vector<Poset> enumerate_posets(int n);

// 2^(n(n-1)/2) subset filter; the independent cross-check for small n.
std::vector<Poset> enumerate_posets_naive(int n);

struct Mismatch {
  std::string check;
  std::string poset;  // text form
  long long formula_value = 0;
  long long oracle_value = 0;
};

struct SweepOptions {
  // Check names; empty means all. Known checks: nilpotent-formula,
  // lower-bound, positivity, height-one-equality, solvable-formula,
  // reduction-rank.
  std::vector<std::string> checks;
  RankMethod oracle = RankMethod::randomized;
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  // With the randomized oracle, every spot_check_period-th instance is also
  // verified exactly. 0 disables spot checks.
  int spot_check_period = 100;
};

struct SweepReport {
  int n = 0;
  long long poset_count = 0;
  std::vector<Mismatch> mismatches;
  std::map<std::string, long long> checks_run;
  double elapsed_seconds = 0;

  bool passed() const { return mismatches.empty(); }
};

// Timing is off the canonical form so identical runs serialize identically.
std::string report_to_json(const SweepReport& report,
                           bool include_timing = false);

SweepReport sweep(int n, const SweepOptions& options = {});

}  // namespace lieposet
