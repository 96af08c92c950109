#pragma once

#include <cstdint>
#include <vector>

#include "gldpc/numerics/exponents.hpp"

namespace gldpc {

// How the partition-count prefactor (ways to pick the variable and check
// classes) is bounded: per-factor Stirling is tighter than the pure entropy
// form and is the default.
enum class CountBound { kStirling, kEntropy };

// How the socket-matching denominator is evaluated: exactly by log-gamma
// (tighter), or by its Stirling lower bound (the closed bound form).
enum class MatchingDenominator { kExactLogGamma, kStirlingLowerBound };

struct TailOptions {
  std::int64_t weight_max = 0;  // largest error weight evaluated (0 = none)
  CountBound count_bound = CountBound::kStirling;
  MatchingDenominator denominator = MatchingDenominator::kExactLogGamma;
  // Tuples whose log-contribution falls this many nats below the running
  // per-weight maximum are pruned.
  double prune_nats = 40;
  // Stop after the cumulative bound reaches 1, where it carries no
  // information (the crossing row is still emitted).
  bool stop_when_vacuous = true;
};

struct TailPoint {
  std::int64_t weight = 0;
  double failure_bound = 0;  // upper bound on P(some weight-`weight` pattern
                             // admits a non-contracting partition)
  double cumulative = 0;     // running sum over weights up to this row
};

// Per-weight failure bound for a length-`block_length` code drawn from the
// (c, d) ensemble of `params`: for each weight i = 1..weight_max, sums over
// every integer partition profile (undecided, at-risk, confused checks,
// cross edges) that could stall the decoder, the product of the class-count
// prefactor and the socket-matching probability. All arithmetic is in the
// log domain. The check count N*c/d may be fractional; it is handled as a
// real quantity throughout.
std::vector<TailPoint> failure_tail_bound(std::int64_t block_length,
                                          const BoundParams& params,
                                          const TailOptions& options);

}  // namespace gldpc
