#include "gldpc/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "gldpc/errors.hpp"

namespace gldpc {
namespace {

std::vector<long long> checked_sorted_set(const TannerGraph& graph,
                                          const std::vector<long long>& set) {
  std::vector<long long> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("corrupt set contains duplicates");
  }
  if (!sorted.empty() &&
      (sorted.front() < 0 || sorted.back() >= graph.num_vars())) {
    throw std::invalid_argument("corrupt set index out of range");
  }
  return sorted;
}

void check_params(const TannerGraph& graph, int c1, int t) {
  if (c1 < 1 || c1 > graph.var_degree()) {
    throw std::invalid_argument("classify: need 1 <= c1 <= c");
  }
  if (t < 0 || t >= graph.check_degree()) {
    throw std::invalid_argument("classify: need 0 <= t < d");
  }
}

}  // namespace

void PartitionWitness::validate(const TannerGraph& graph, int c1,
                                int t) const {
  check_params(graph, c1, t);
  auto is_sorted_unique = [](const std::vector<long long>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!is_sorted_unique(corrupt_set) || !is_sorted_unique(suspect_checks) ||
      !is_sorted_unique(undecided_corrupt) ||
      !is_sorted_unique(at_risk_correct)) {
    throw std::logic_error("witness sets must be sorted and duplicate free");
  }
  if (counts.corrupt != static_cast<long long>(corrupt_set.size()) ||
      counts.undecided != static_cast<long long>(undecided_corrupt.size()) ||
      counts.at_risk != static_cast<long long>(at_risk_correct.size()) ||
      counts.suspect != static_cast<long long>(suspect_checks.size())) {
    throw std::logic_error("witness counts disagree with witness sets");
  }
  if (counts.undecided > counts.corrupt) {
    throw std::logic_error("more undecided than corrupt variables");
  }
  if (counts.at_risk > graph.num_vars() - counts.corrupt) {
    throw std::logic_error("more at-risk variables than correct variables");
  }
  if (counts.suspect > graph.num_checks()) {
    throw std::logic_error("more suspect checks than checks");
  }
  // Each suspect check absorbs more than t and at most d corrupt edges, and
  // B cannot supply more than c edges per member.
  if (counts.suspect > 0 &&
      (counts.cross_edges < counts.suspect * (t + 1) ||
       counts.cross_edges >
           counts.suspect * static_cast<long long>(graph.check_degree()) ||
       counts.cross_edges > counts.corrupt * graph.var_degree())) {
    throw std::logic_error("cross edge count out of range");
  }
}

PartitionWitness classify(const TannerGraph& graph,
                          const std::vector<long long>& corrupt_set, int c1,
                          int t) {
  check_params(graph, c1, t);
  PartitionWitness w;
  w.corrupt_set = checked_sorted_set(graph, corrupt_set);

  // Edges from each check into B; only checks adjacent to B can be suspect.
  std::unordered_map<long long, int> edges_into_b;
  for (long long var : w.corrupt_set) {
    for (std::uint32_t check : graph.var_checks(var)) ++edges_into_b[check];
  }
  std::unordered_map<long long, char> suspect;
  for (const auto& [check, edges] : edges_into_b) {
    if (edges > t) {
      suspect[check] = 1;
      w.suspect_checks.push_back(check);
      w.counts.cross_edges += edges;
    }
  }
  std::sort(w.suspect_checks.begin(), w.suspect_checks.end());

  // Corrupt variables: repaired for sure only with >= c1 helpful neighbors.
  for (long long var : w.corrupt_set) {
    int helpful_edges = 0;
    for (std::uint32_t check : graph.var_checks(var)) {
      if (!suspect.count(check)) ++helpful_edges;
    }
    if (helpful_edges < c1) {
      w.undecided_corrupt.push_back(var);
    } else {
      w.secured_corrupt.push_back(var);
    }
  }

  // Correct variables at risk: >= c1 edges into suspect checks.  Only
  // neighbors of suspect checks can qualify.
  std::unordered_map<long long, int> suspect_edges;
  for (long long check : w.suspect_checks) {
    for (std::uint32_t var : graph.check_vars(check)) ++suspect_edges[var];
  }
  for (const auto& [var, edges] : suspect_edges) {
    if (edges < c1) continue;
    if (std::binary_search(w.corrupt_set.begin(), w.corrupt_set.end(), var)) {
      continue;
    }
    w.at_risk_correct.push_back(var);
  }
  std::sort(w.at_risk_correct.begin(), w.at_risk_correct.end());

  w.counts.corrupt = static_cast<long long>(w.corrupt_set.size());
  w.counts.undecided = static_cast<long long>(w.undecided_corrupt.size());
  w.counts.at_risk = static_cast<long long>(w.at_risk_correct.size());
  w.counts.suspect = static_cast<long long>(w.suspect_checks.size());
  return w;
}

bool is_possibly_bad(const TannerGraph& graph,
                     const std::vector<long long>& corrupt_set, int c1,
                     int t) {
  const PartitionWitness w = classify(graph, corrupt_set, c1, t);
  return w.counts.at_risk >= w.counts.corrupt - w.counts.undecided;
}

std::vector<std::vector<long long>> expurgation_scan(const TannerGraph& graph,
                                                     int b_max, int c1, int t,
                                                     long long budget) {
  check_params(graph, c1, t);
  if (b_max < 1) throw std::invalid_argument("expurgation_scan: b_max >= 1");
  const long long N = graph.num_vars();

  // Edge counts from the current candidate set into each check, maintained
  // incrementally.  A set without any suspect check is never possibly bad
  // (nothing can be damaged and |B| >= 1), so classification runs only when
  // at least one check exceeds t edges.
  std::vector<int> edges_into_b(graph.num_checks(), 0);
  int suspects = 0;
  auto push_var = [&](long long var) {
    for (std::uint32_t check : graph.var_checks(var)) {
      if (++edges_into_b[check] == t + 1) ++suspects;
    }
  };
  auto pop_var = [&](long long var) {
    for (std::uint32_t check : graph.var_checks(var)) {
      if (edges_into_b[check]-- == t + 1) --suspects;
    }
  };

  std::vector<std::vector<long long>> bad;
  std::vector<long long> current;
  long long examined = 0;

  // Members are chosen in increasing order; every nonempty prefix is itself
  // a candidate, so all sets of size 1..b_max are covered exactly once.
  auto extend = [&](auto&& self, long long next_min) -> void {
    if (!current.empty()) {
      if (budget >= 0 && ++examined > budget) {
        throw BudgetExhausted("expurgation_scan exceeded its candidate budget");
      }
      if (suspects > 0 && is_possibly_bad(graph, current, c1, t)) {
        bad.push_back(current);
      }
    }
    if (static_cast<int>(current.size()) == b_max) return;
    for (long long var = next_min; var < N; ++var) {
      current.push_back(var);
      push_var(var);
      self(self, var + 1);
      pop_var(var);
      current.pop_back();
    }
  };
  extend(extend, 0);

  std::sort(bad.begin(), bad.end(),
            [](const std::vector<long long>& a,
               const std::vector<long long>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                  b.rbegin(), b.rend());
            });
  return bad;
}

}  // namespace gldpc
