#include "gldpc/decoder.hpp"

#include <cassert>
#include <stdexcept>

namespace gldpc {
namespace {

long long count_disagreements(std::span<const std::uint32_t> a,
                              std::span<const std::uint32_t> b) {
  long long n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += (a[i] != b[i]);
  return n;
}

// Per-variable vote ledger for one round of generic (flip-to-value)
// decoding.  A variable can receive votes for several targets from
// different checks; with c1 > c/2 at most one target can reach the
// threshold, which the update asserts.
class VoteLedger {
 public:
  VoteLedger(long long num_vars, int var_degree)
      : var_degree_(var_degree),
        targets_(num_vars * var_degree),
        counts_(num_vars * var_degree, 0),
        used_(num_vars, 0) {}

  void add(std::uint32_t var, std::uint32_t target) {
    const std::size_t base = static_cast<std::size_t>(var) * var_degree_;
    const int used = used_[var];
    for (int k = 0; k < used; ++k) {
      if (targets_[base + k] == target) {
        ++counts_[base + k];
        return;
      }
    }
    targets_[base + used] = target;
    counts_[base + used] = 1;
    used_[var] = used + 1;
  }

  // Applies the threshold to one variable; returns true if it changed.
  bool apply(std::uint32_t var, int threshold, std::uint32_t& value) const {
    const std::size_t base = static_cast<std::size_t>(var) * var_degree_;
    bool changed = false;
    for (int k = 0; k < used_[var]; ++k) {
      if (counts_[base + k] >= threshold) {
        assert(!changed && "two targets reached the flip threshold");
        value = targets_[base + k];
        changed = true;
#ifdef NDEBUG
        break;
#endif
      }
    }
    return changed;
  }

  void clear(std::span<const std::uint32_t> touched) {
    for (std::uint32_t var : touched) used_[var] = 0;
  }
  void clear_all() { used_.assign(used_.size(), 0); }

 private:
  int var_degree_;
  std::vector<std::uint32_t> targets_;
  std::vector<int> counts_;
  std::vector<int> used_;
};

}  // namespace

std::vector<FlipVote> check_votes(const TannerGraph& graph,
                                  const ComponentCode& code, long long check,
                                  std::span<const std::uint32_t> assignment) {
  const int d = graph.check_degree();
  Word local(d);
  const auto vars = graph.check_vars(check);
  for (int m = 0; m < d; ++m) local[m] = assignment[vars[m]];
  const auto decoded = code.bdd(local);
  std::vector<FlipVote> votes;
  if (!decoded) return votes;
  for (int m = 0; m < d; ++m) {
    if ((*decoded)[m] == local[m]) continue;
    bool merged = false;
    for (FlipVote& v : votes) {
      if (v.var == vars[m] && v.target == (*decoded)[m]) {
        ++v.votes;
        merged = true;
        break;
      }
    }
    if (!merged) votes.push_back({vars[m], (*decoded)[m], 1});
  }
  return votes;
}

DecodeResult decode(const TannerGraph& graph, const ComponentCode& code,
                    std::span<const std::uint32_t> initial,
                    const DecoderConfig& config,
                    std::span<const std::uint32_t> reference) {
  if (code.blocklength() != graph.check_degree()) {
    throw std::invalid_argument("component code blocklength != check degree");
  }
  if (static_cast<long long>(initial.size()) != graph.num_vars()) {
    throw std::invalid_argument("initial assignment has wrong length");
  }
  if (!reference.empty() &&
      static_cast<long long>(reference.size()) != graph.num_vars()) {
    throw std::invalid_argument("reference word has wrong length");
  }
  const int c1 = config.c1;
  if (c1 < 1 || c1 > graph.var_degree()) {
    throw std::invalid_argument("flip threshold c1 must satisfy 1 <= c1 <= c");
  }
  const bool binary = code.field().order() == 2;
  if (!binary && 2 * c1 <= graph.var_degree()) {
    throw std::invalid_argument(
        "non-binary decoding requires c1 > c/2 so that the flip target is "
        "unique");
  }
  if (config.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  for (std::uint32_t s : initial) {
    if (!code.field().valid(s)) {
      throw std::invalid_argument("initial assignment symbol outside field");
    }
  }

  const long long N = graph.num_vars();
  const long long J = graph.num_checks();
  const int c = graph.var_degree();
  const int d = graph.check_degree();
  const bool generic = !binary || config.use_generic_messages;

  DecodeResult result;
  result.word.assign(initial.begin(), initial.end());
  Word current = result.word;

  std::vector<int> complement_votes(generic ? 0 : N, 0);
  VoteLedger ledger(generic ? N : 0, generic ? c : 1);
  Word local(d);

  for (int round = 1; round <= config.max_iterations; ++round) {
    // Message phase: all checks decode the PREVIOUS assignment.
    bool any_vote = false;
    bool all_satisfied = true;
    for (long long j = 0; j < J; ++j) {
      const auto vars = graph.check_vars(j);
      for (int m = 0; m < d; ++m) local[m] = current[vars[m]];
      const auto decoded = code.bdd(local);
      if (!decoded) {
        all_satisfied = false;
        continue;
      }
      for (int m = 0; m < d; ++m) {
        if ((*decoded)[m] == local[m]) continue;
        all_satisfied = false;
        any_vote = true;
        if (generic) {
          ledger.add(vars[m], (*decoded)[m]);
        } else {
          ++complement_votes[vars[m]];
        }
      }
    }

    // Update phase: flip every variable that met the threshold.
    bool changed = false;
    if (any_vote) {
      if (generic) {
        for (long long i = 0; i < N; ++i) {
          std::uint32_t value = current[i];
          if (ledger.apply(static_cast<std::uint32_t>(i), c1, value)) {
            current[i] = value;
            changed = true;
          }
        }
        ledger.clear_all();
      } else {
        for (long long i = 0; i < N; ++i) {
          if (complement_votes[i] >= c1) {
            current[i] ^= 1u;
            changed = true;
          }
          complement_votes[i] = 0;
        }
      }
    }

    result.iterations = round;
    if (!reference.empty()) {
      result.corrupt_trace.push_back(count_disagreements(current, reference));
    }

    if (!changed) {
      // Nothing moved: this assignment is a fixpoint.
      result.termination = Termination::kFixpoint;
      break;
    }
    if (all_satisfied) {
      // Every check accepted its local word at distance 0, which cannot
      // happen after a change; kept for clarity (unreachable).
      result.termination = Termination::kFixpoint;
      break;
    }
    // Early exit: if the updated assignment satisfies every check, the next
    // round would provably change nothing, so stop here with the same word.
    bool now_satisfied = true;
    for (long long j = 0; j < J && now_satisfied; ++j) {
      const auto vars = graph.check_vars(j);
      for (int m = 0; m < d; ++m) local[m] = current[vars[m]];
      now_satisfied = code.is_codeword(local);
    }
    if (now_satisfied) {
      result.termination = Termination::kFixpoint;
      break;
    }
    if (round == config.max_iterations) {
      result.termination = Termination::kIterationCap;
    }
  }

  result.word = std::move(current);
  return result;
}

}  // namespace gldpc
