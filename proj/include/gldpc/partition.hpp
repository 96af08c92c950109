#pragma once
#include <cstdint>
#include <vector>

#include "gldpc/tanner.hpp"

namespace gldpc {

// Counts describing how a set B of corrupt variables sits in the graph.
// Edges are always counted with multiplicity.
struct PartitionCounts {
  long long corrupt = 0;      // |B|
  long long undecided = 0;    // corrupt variables with < c1 edges to helpful checks
  long long at_risk = 0;      // correct variables with >= c1 edges to suspect checks
  long long suspect = 0;      // checks with > t edges into B
  long long cross_edges = 0;  // edges between B and the suspect checks
};

// Full classification of the graph relative to a corrupt set B.
//
// Checks with more than t edges into B may decode wrongly ("suspect"); the
// rest see at most t errors and therefore decode correctly ("helpful").
// A corrupt variable with at least c1 helpful neighbors is guaranteed to be
// repaired in one round; otherwise it is "undecided".  A correct variable
// with at least c1 suspect neighbors could be damaged in one round
// ("at risk"); otherwise it is safe.
struct PartitionWitness {
  std::vector<long long> corrupt_set;        // B, sorted
  std::vector<long long> undecided_corrupt;  // subset of B
  std::vector<long long> secured_corrupt;    // B minus undecided
  std::vector<long long> at_risk_correct;
  std::vector<long long> suspect_checks;
  PartitionCounts counts;

  // Consistency of the counts with the sets; throws std::logic_error on
  // violation (used by tests and debug paths).
  void validate(const TannerGraph& graph, int c1, int t) const;
};

// Classifies the corrupt set B (indices into [0, N), duplicates rejected).
PartitionWitness classify(const TannerGraph& graph,
                          const std::vector<long long>& corrupt_set, int c1,
                          int t);

// A set B is "possibly bad" when the at-risk correct variables could fully
// replace the guaranteed repairs, i.e. |at risk| >= |B| - |undecided|.
// Otherwise one decoding round strictly shrinks the corrupt set.
bool is_possibly_bad(const TannerGraph& graph,
                     const std::vector<long long>& corrupt_set, int c1, int t);

// Enumerates every nonempty corrupt set of size at most b_max (in colex
// order) and returns the possibly-bad ones.  Throws BudgetExhausted once
// more than `budget` candidate sets have been examined (budget < 0 means
// unlimited).
std::vector<std::vector<long long>> expurgation_scan(const TannerGraph& graph,
                                                     int b_max, int c1, int t,
                                                     long long budget = -1);

}  // namespace gldpc
