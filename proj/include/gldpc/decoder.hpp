#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "gldpc/component_code.hpp"
#include "gldpc/tanner.hpp"

namespace gldpc {

struct DecoderConfig {
  int c1 = 0;                // votes required to change a variable
  int max_iterations = 100;  // hard cap on decoding rounds
  // When true, binary codes also run the generic flip-to-value message
  // machinery instead of the specialized complement path.  The two paths
  // produce identical trajectories; the flag exists so tests can check that.
  bool use_generic_messages = false;
};

enum class Termination {
  kFixpoint,      // an iteration changed nothing (or reached zero syndromes)
  kIterationCap,  // still moving when the iteration budget ran out
};

struct DecodeResult {
  Word word;                        // final variable assignment
  int iterations = 0;               // rounds executed
  Termination termination = Termination::kIterationCap;
  // Number of disagreements with the reference word after each round; filled
  // only when a reference is supplied to decode().
  std::vector<long long> corrupt_trace;
};

// One flip vote produced by a check: "change variable `var` to `target`".
struct FlipVote {
  std::uint32_t var;
  std::uint32_t target;
  int votes;
};

// Runs the parallel flip decoder.
//
// Every round, each check decodes its local word within radius t; a check
// whose decode succeeds votes, on every slot where the decoded word differs
// from the current assignment, to change that variable to the decoded
// symbol (parallel edges vote once per edge).  All votes are computed from
// the previous round's assignment, then every variable that collected at
// least c1 votes for one target adopts it.  Decoding stops at the first
// round that changes nothing, or as soon as every check is satisfied, or
// after max_iterations rounds.
DecodeResult decode(const TannerGraph& graph, const ComponentCode& code,
                    std::span<const std::uint32_t> initial,
                    const DecoderConfig& config,
                    std::span<const std::uint32_t> reference = {});

// The votes a single check would emit for the current assignment; empty when
// the check's local decode fails or agrees everywhere.  Exposed for tests.
std::vector<FlipVote> check_votes(const TannerGraph& graph,
                                  const ComponentCode& code, long long check,
                                  std::span<const std::uint32_t> assignment);

}  // namespace gldpc
