#pragma once

#include <cstdint>

#include "lieposet/lie_algebra.hpp"

namespace lieposet {

enum class RankMethod { exact, randomized };

// 61-bit Mersenne prime; the evaluation field for randomized rank. Fixed so
// results reproduce from a seed alone.
inline constexpr std::uint64_t kRankFieldPrime = (std::uint64_t{1} << 61) - 1;

inline constexpr int kDefaultTrials = 3;

struct RankResult {
  int rank = 0;
  RankMethod method = RankMethod::exact;
  int trials = 0;            // randomized only
  double failure_bound = 0;  // randomized only: (dim / field size)^trials
};

// Rank over the multivariate rational-function field, by fraction-free
// elimination on the polynomial ring with exact integer arithmetic.
// Deterministic; pivots are the first nonzero entry in row-major scan order.
RankResult exact_rank(const SymbolicMatrix& m);

// Schwartz-Zippel rank: substitute uniform field values for each symbol,
// take the numeric rank mod kRankFieldPrime, max over trials. Never exceeds
// the generic rank; falls short with probability <= failure_bound.
RankResult randomized_rank(const SymbolicMatrix& m, int trials = kDefaultTrials,
                           std::uint64_t seed = 0);

RankResult matrix_rank(const SymbolicMatrix& m, RankMethod method,
                       int trials = kDefaultTrials, std::uint64_t seed = 0);

// dim g - rank of the commutator matrix.
int index_via_rank(const Poset& poset, Variant variant,
                   RankMethod method = RankMethod::exact,
                   int trials = kDefaultTrials, std::uint64_t seed = 0);

}  // namespace lieposet
